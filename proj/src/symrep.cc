// Copyright 2026 The dfsgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "dfsgates/symrep.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dfsgates {

namespace {

// Coefficients below this are dropped from group-algebra elements.
constexpr double kZeroCoefficient = 1e-15;

bool rows_are_standard(const std::vector<std::vector<int>> &rows) {
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty() || (r > 0 && rows[r].size() > rows[r - 1].size())) {
            return false;
        }
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] <= rows[r][c - 1]) {
                return false;
            }
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) {
                return false;
            }
        }
    }
    std::vector<int> all;
    for (const auto &row : rows) {
        all.insert(all.end(), row.begin(), row.end());
    }
    std::sort(all.begin(), all.end());
    for (size_t k = 0; k < all.size(); ++k) {
        if (all[k] != static_cast<int>(k) + 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1 || (k > 0 && parts_[k] > parts_[k - 1])) {
            throw std::invalid_argument("partition parts must be positive and non-increasing: " + str());
        }
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t k = 0; k < parts_.size(); ++k) {
        out << (k ? "," : "") << parts_[k];
    }
    out << ')';
    return out.str();
}

// ---------------------------------------------------------- StandardTableau

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (!rows_are_standard(rows_)) {
        throw std::invalid_argument("not a standard Young tableau");
    }
    index_cells();
}

void StandardTableau::index_cells() {
    n_ = 0;
    for (const auto &row : rows_) {
        n_ += static_cast<int>(row.size());
    }
    cells_.assign(n_, {0, 0});
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            cells_[rows_[r][c] - 1] = {static_cast<int>(r), static_cast<int>(c)};
        }
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    for (const auto &row : rows_) {
        parts.push_back(static_cast<int>(row.size()));
    }
    return Partition(std::move(parts));
}

int StandardTableau::row_of(int k) const {
    if (k < 1 || k > n_) {
        throw std::out_of_range("tableau entry out of range: " + std::to_string(k));
    }
    return cells_[k - 1].first;
}

int StandardTableau::col_of(int k) const {
    if (k < 1 || k > n_) {
        throw std::out_of_range("tableau entry out of range: " + std::to_string(k));
    }
    return cells_[k - 1].second;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> word;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        word.insert(word.end(), it->begin(), it->end());
    }
    return word;
}

std::optional<StandardTableau> StandardTableau::exchanged(int a, int b) const {
    auto rows = rows_;
    for (auto &row : rows) {
        for (int &x : row) {
            if (x == a) {
                x = b;
            } else if (x == b) {
                x = a;
            }
        }
    }
    if (!rows_are_standard(rows)) {
        return std::nullopt;
    }
    return StandardTableau(std::move(rows));
}

std::string StandardTableau::str() const {
    std::ostringstream out;
    out << '[';
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) {
            out << " /";
        }
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            out << (r == 0 && c == 0 ? "" : " ") << rows_[r][c];
        }
    }
    out << ']';
    return out.str();
}

std::vector<StandardTableau> standard_tableaux(const Partition &shape) {
    const auto &parts = shape.parts();
    const int n = shape.size();
    std::vector<std::vector<int>> rows(parts.size());
    std::vector<StandardTableau> out;
    // Place 1..n one at a time; k may go at the end of row r if the row is not
    // full and the row above is strictly longer.
    std::function<void(int)> place = [&](int k) {
        if (k > n) {
            out.emplace_back(rows);
            return;
        }
        for (size_t r = 0; r < parts.size(); ++r) {
            if (static_cast<int>(rows[r].size()) < parts[r] && (r == 0 || rows[r - 1].size() > rows[r].size())) {
                rows[r].push_back(k);
                place(k + 1);
                rows[r].pop_back();
            }
        }
    };
    place(1);
    std::sort(out.begin(), out.end(), [](const StandardTableau &a, const StandardTableau &b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

int axial_distance(const StandardTableau &tableau, int i, int j) {
    return tableau.content(j) - tableau.content(i);
}

// ------------------------------------------------------------ Transposition

Transposition::Transposition(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b || i < 1) {
        throw std::invalid_argument("transposition needs two distinct labels >= 1");
    }
}

std::string Transposition::str() const {
    return "(" + std::to_string(i) + " " + std::to_string(j) + ")";
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 1 || x > degree() || seen[x - 1]) {
            throw std::invalid_argument("permutation images must be a bijection on 1..n");
        }
        seen[x - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, Transposition t) {
    if (t.j > n) {
        throw std::out_of_range("transposition " + t.str() + " exceeds degree " + std::to_string(n));
    }
    auto p = identity(n);
    std::swap(p.images_[t.i - 1], p.images_[t.j - 1]);
    return p;
}

bool Permutation::is_identity() const {
    for (int k = 1; k <= degree(); ++k) {
        if ((*this)(k) != k) {
            return false;
        }
    }
    return true;
}

std::optional<Transposition> Permutation::as_transposition() const {
    std::vector<int> moved;
    for (int k = 1; k <= degree(); ++k) {
        if ((*this)(k) != k) {
            moved.push_back(k);
        }
    }
    if (moved.size() != 2) {
        return std::nullopt;
    }
    return Transposition(moved[0], moved[1]);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int k = 1; k <= degree(); ++k) {
        inv[(*this)(k) - 1] = k;
    }
    return Permutation(std::move(inv));
}

std::vector<Transposition> Permutation::transposition_factors() const {
    std::vector<Transposition> factors;
    std::vector<bool> visited(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (visited[start - 1]) {
            continue;
        }
        std::vector<int> cycle;
        for (int k = start; !visited[k - 1]; k = (*this)(k)) {
            visited[k - 1] = true;
            cycle.push_back(k);
        }
        for (size_t m = cycle.size(); m-- > 1;) {
            factors.emplace_back(cycle[0], cycle[m]);
        }
    }
    return factors;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
    if (rhs.degree() != degree()) {
        throw std::invalid_argument("permutation degree mismatch");
    }
    std::vector<int> images(images_.size());
    for (int k = 1; k <= degree(); ++k) {
        images[k - 1] = (*this)(rhs(k));
    }
    return Permutation(std::move(images));
}

std::string Permutation::str() const {
    std::ostringstream out;
    std::vector<bool> visited(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (visited[start - 1] || (*this)(start) == start) {
            continue;
        }
        out << '(';
        for (int k = start; !visited[k - 1]; k = (*this)(k)) {
            visited[k - 1] = true;
            out << (k == start ? "" : " ") << k;
        }
        out << ')';
    }
    const auto s = out.str();
    return s.empty() ? "()" : s;
}

// ------------------------------------------------------ GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::identity(int degree, Complex coefficient) {
    GroupAlgebraElement x(degree);
    x.add_term(Permutation::identity(degree), coefficient);
    return x;
}

GroupAlgebraElement GroupAlgebraElement::transposition(int degree, Transposition t, Complex coefficient) {
    GroupAlgebraElement x(degree);
    x.add_term(Permutation::transposition(degree, t), coefficient);
    return x;
}

GroupAlgebraElement GroupAlgebraElement::from_transpositions(int degree,
                                                             const std::map<Transposition, double> &coefficients) {
    GroupAlgebraElement x(degree);
    for (const auto &[t, c] : coefficients) {
        x.add_term(Permutation::transposition(degree, t), c);
    }
    return x;
}

Complex GroupAlgebraElement::coefficient(const Permutation &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Complex{0.0} : it->second;
}

GroupAlgebraElement &GroupAlgebraElement::add_term(const Permutation &p, Complex coefficient) {
    if (p.degree() != degree_) {
        throw std::invalid_argument("permutation degree does not match group algebra degree");
    }
    auto [it, inserted] = terms_.try_emplace(p, 0.0);
    it->second += coefficient;
    if (std::abs(it->second) < kZeroCoefficient) {
        terms_.erase(it);
    }
    return *this;
}

void GroupAlgebraElement::check_degree(const GroupAlgebraElement &rhs) const {
    if (rhs.degree_ != degree_) {
        throw std::invalid_argument("group algebra degree mismatch");
    }
}

GroupAlgebraElement &GroupAlgebraElement::operator+=(const GroupAlgebraElement &rhs) {
    check_degree(rhs);
    for (const auto &[p, c] : rhs.terms_) {
        add_term(p, c);
    }
    return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator-=(const GroupAlgebraElement &rhs) {
    check_degree(rhs);
    for (const auto &[p, c] : rhs.terms_) {
        add_term(p, -c);
    }
    return *this;
}

GroupAlgebraElement &GroupAlgebraElement::operator*=(Complex scalar) {
    if (scalar == Complex{0.0}) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        it = std::abs(it->second) < kZeroCoefficient ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement &rhs) const {
    auto out = *this;
    return out += rhs;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement &rhs) const {
    auto out = *this;
    return out -= rhs;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement &rhs) const {
    check_degree(rhs);
    GroupAlgebraElement out(degree_);
    for (const auto &[p, a] : terms_) {
        for (const auto &[q, b] : rhs.terms_) {
            out.add_term(p * q, a * b);
        }
    }
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(Complex scalar) const {
    auto out = *this;
    return out *= scalar;
}

std::optional<std::pair<std::map<Transposition, double>, double>> GroupAlgebraElement::as_exchange_combination()
    const {
    std::map<Transposition, double> coefficients;
    double identity = 0.0;
    for (const auto &[p, c] : terms_) {
        if (c.imag() != 0.0) {
            return std::nullopt;
        }
        if (p.is_identity()) {
            identity = c.real();
        } else if (auto t = p.as_transposition()) {
            coefficients[*t] = c.real();
        } else {
            return std::nullopt;
        }
    }
    return std::make_pair(std::move(coefficients), identity);
}

std::string GroupAlgebraElement::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[p, c] : terms_) {
        out << (first ? "" : " + ");
        first = false;
        if (c.imag() == 0.0) {
            out << c.real();
        } else {
            out << '(' << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        }
        out << '*' << p.str();
    }
    return out.str();
}

// ------------------------------------------------------- YoungOrthogonalRep

YoungOrthogonalRep::YoungOrthogonalRep(Partition shape)
    : shape_(std::move(shape)), basis_(standard_tableaux(shape_)) {
    for (size_t k = 0; k < basis_.size(); ++k) {
        index_.emplace(basis_[k], static_cast<Eigen::Index>(k));
    }
    const int n = degree();
    const Eigen::Index d = dim();
    for (int i = 1; i < n; ++i) {
        RealMatrix m = RealMatrix::Zero(d, d);
        for (Eigen::Index col = 0; col < d; ++col) {
            const auto &t = basis_[col];
            const double axial = axial_distance(t, i, i + 1);
            m(col, col) = 1.0 / axial;
            // Same row or column gives axial distance +-1 and an invalid exchange.
            if (std::abs(axial) > 1.0) {
                const auto swapped = t.exchanged(i, i + 1);
                m(index_of(*swapped), col) = std::sqrt(1.0 - 1.0 / (axial * axial));
            }
        }
        adjacent_.push_back(std::move(m));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            RealMatrix m = adjacent_[i - 1];
            for (int k = i + 1; k < j; ++k) {
                m = adjacent_[k - 1] * m * adjacent_[k - 1];
            }
            transpositions_.emplace(Transposition(i, j), std::move(m));
        }
    }
}

Eigen::Index YoungOrthogonalRep::index_of(const StandardTableau &t) const {
    auto it = index_.find(t);
    if (it == index_.end()) {
        throw std::invalid_argument("tableau " + t.str() + " is not a basis vector of " + shape_.str());
    }
    return it->second;
}

const RealMatrix &YoungOrthogonalRep::adjacent(int i) const {
    if (i < 1 || i >= degree()) {
        throw std::out_of_range("adjacent transposition index out of range: " + std::to_string(i));
    }
    return adjacent_[i - 1];
}

const RealMatrix &YoungOrthogonalRep::transposition(Transposition t) const {
    auto it = transpositions_.find(t);
    if (it == transpositions_.end()) {
        throw std::out_of_range("transposition " + t.str() + " outside S_" + std::to_string(degree()));
    }
    return it->second;
}

RealMatrix YoungOrthogonalRep::permutation(const Permutation &p) const {
    if (p.degree() != degree()) {
        throw std::invalid_argument("permutation degree does not match irrep " + shape_.str());
    }
    RealMatrix m = RealMatrix::Identity(dim(), dim());
    for (const auto &t : p.transposition_factors()) {
        m = m * transposition(t);
    }
    return m;
}

Matrix YoungOrthogonalRep::element(const GroupAlgebraElement &x) const {
    if (x.degree() != degree()) {
        throw std::invalid_argument("group algebra degree " + std::to_string(x.degree()) + " does not match irrep " +
                                    shape_.str());
    }
    Matrix m = Matrix::Zero(dim(), dim());
    for (const auto &[p, c] : x.terms()) {
        if (p.is_identity()) {
            m.diagonal().array() += c;
        } else if (auto t = p.as_transposition()) {
            m += c * transposition(*t).cast<Complex>();
        } else {
            m += c * permutation(p).cast<Complex>();
        }
    }
    return m;
}

const YoungOrthogonalRep &young_rep(const Partition &shape) {
    static std::mutex mutex;
    static std::map<Partition, std::unique_ptr<YoungOrthogonalRep>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[shape];
    if (!slot) {
        slot = std::make_unique<YoungOrthogonalRep>(shape);
    }
    return *slot;
}

IrrepMatrix rep_adjacent(const Partition &shape, int i) {
    const auto &rep = young_rep(shape);
    return {shape, rep.adjacent(i).cast<Complex>(), rep.basis()};
}

IrrepMatrix rep_element(const Partition &shape, const GroupAlgebraElement &x) {
    const auto &rep = young_rep(shape);
    return {shape, rep.element(x), rep.basis()};
}

nlohmann::json to_json(const IrrepMatrix &m) {
    nlohmann::json out;
    out["irrep"] = m.irrep.parts();
    out["basis"] = nlohmann::json::array();
    for (const auto &t : m.basis) {
        out["basis"].push_back(t.rows());
    }
    out["matrix"] = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.matrix.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.matrix.cols(); ++c) {
            row.push_back({m.matrix(r, c).real(), m.matrix(r, c).imag()});
        }
        out["matrix"].push_back(std::move(row));
    }
    return out;
}

}  // namespace dfsgates
