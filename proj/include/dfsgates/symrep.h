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
#ifndef DFSGATES_SYMREP_H
#define DFSGATES_SYMREP_H

// Partitions, standard Young tableaux and Young's orthogonal form for the
// symmetric group, extended linearly to the group algebra.
//
// Conventions:
//  * Permutations act on {1..n}. The product s * t is function composition:
//    apply t first, then s.
//  * Standard tableaux of a shape are ordered lexicographically by their
//    reading word (rows read bottom to top, each row left to right). For
//    shape (2,1) this puts [1 3 / 2] before [1 2 / 3].
//  * Representation matrices act on column vectors of tableau coefficients.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dfsgates/linalg.h"

namespace dfsgates {

class Partition {
   public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const {
        return parts_;
    }
    int size() const;
    int num_parts() const {
        return static_cast<int>(parts_.size());
    }
    std::string str() const;

    auto operator<=>(const Partition &) const = default;

   private:
    std::vector<int> parts_;
};

class StandardTableau {
   public:
    /// Throws std::invalid_argument if rows do not form a standard tableau.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>> &rows() const {
        return rows_;
    }
    Partition shape() const;
    int n() const {
        return n_;
    }
    /// 0-based row / column of entry k (1 <= k <= n).
    int row_of(int k) const;
    int col_of(int k) const;
    /// Content c - r of the cell holding k.
    int content(int k) const {
        return col_of(k) - row_of(k);
    }
    std::vector<int> reading_word() const;
    /// Tableau with entries a and b exchanged, if the result is still standard.
    std::optional<StandardTableau> exchanged(int a, int b) const;
    std::string str() const;

    auto operator<=>(const StandardTableau &other) const {
        return rows_ <=> other.rows_;
    }
    bool operator==(const StandardTableau &other) const {
        return rows_ == other.rows_;
    }

   private:
    void index_cells();

    std::vector<std::vector<int>> rows_;
    int n_ = 0;
    std::vector<std::pair<int, int>> cells_;  // cells_[k-1] = (row, col)
};

/// All standard tableaux of the shape, in reading-word lexicographic order.
std::vector<StandardTableau> standard_tableaux(const Partition &shape);

/// (c(j) - r(j)) - (c(i) - r(i)). Throws std::out_of_range for bad indices.
int axial_distance(const StandardTableau &tableau, int i, int j);

/// Unordered pair {i, j} of spin labels, stored with i < j, 1-indexed.
struct Transposition {
    int i = 1;
    int j = 2;

    Transposition() = default;
    Transposition(int a, int b);

    auto operator<=>(const Transposition &) const = default;
    std::string str() const;
};

class Permutation {
   public:
    Permutation() = default;
    /// images[k-1] is the image of k. Throws unless a bijection on {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation transposition(int n, Transposition t);

    int degree() const {
        return static_cast<int>(images_.size());
    }
    int operator()(int k) const {
        return images_[k - 1];
    }
    const std::vector<int> &images() const {
        return images_;
    }
    bool is_identity() const;
    std::optional<Transposition> as_transposition() const;
    Permutation inverse() const;

    /// Transpositions t1..tm with *this == t1 * t2 * ... * tm (cycle by cycle,
    /// (a1 ... am) = (a1 am)(a1 a{m-1})...(a1 a2)).
    std::vector<Transposition> transposition_factors() const;

    Permutation operator*(const Permutation &rhs) const;
    auto operator<=>(const Permutation &) const = default;
    std::string str() const;

   private:
    std::vector<int> images_;
};

/// Sparse complex combination of permutations of a fixed degree.
class GroupAlgebraElement {
   public:
    explicit GroupAlgebraElement(int degree = 6) : degree_(degree) {
    }

    static GroupAlgebraElement identity(int degree, Complex coefficient = 1.0);
    static GroupAlgebraElement transposition(int degree, Transposition t, Complex coefficient = 1.0);
    /// Real combination of transpositions.
    static GroupAlgebraElement from_transpositions(int degree, const std::map<Transposition, double> &coefficients);

    int degree() const {
        return degree_;
    }
    const std::map<Permutation, Complex> &terms() const {
        return terms_;
    }
    bool is_zero() const {
        return terms_.empty();
    }
    Complex coefficient(const Permutation &p) const;

    GroupAlgebraElement &add_term(const Permutation &p, Complex coefficient);
    GroupAlgebraElement &operator+=(const GroupAlgebraElement &rhs);
    GroupAlgebraElement &operator-=(const GroupAlgebraElement &rhs);
    GroupAlgebraElement &operator*=(Complex scalar);

    GroupAlgebraElement operator+(const GroupAlgebraElement &rhs) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement &rhs) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement &rhs) const;
    GroupAlgebraElement operator*(Complex scalar) const;
    friend GroupAlgebraElement operator*(Complex scalar, const GroupAlgebraElement &x) {
        return x * scalar;
    }

    /// Real transposition coefficients and a real identity coefficient, if the
    /// element is exactly of that form; std::nullopt otherwise.
    std::optional<std::pair<std::map<Transposition, double>, double>> as_exchange_combination() const;

    std::string str() const;

   private:
    void check_degree(const GroupAlgebraElement &rhs) const;

    int degree_;
    std::map<Permutation, Complex> terms_;
};

struct IrrepMatrix {
    Partition irrep;
    Matrix matrix;
    std::vector<StandardTableau> basis;

    Eigen::Index dim() const {
        return matrix.rows();
    }
};

/// Young's orthogonal form for one shape. Immutable after construction.
class YoungOrthogonalRep {
   public:
    explicit YoungOrthogonalRep(Partition shape);

    const Partition &shape() const {
        return shape_;
    }
    int degree() const {
        return shape_.size();
    }
    Eigen::Index dim() const {
        return static_cast<Eigen::Index>(basis_.size());
    }
    const std::vector<StandardTableau> &basis() const {
        return basis_;
    }
    /// Position of a tableau in basis(). Throws std::invalid_argument if absent.
    Eigen::Index index_of(const StandardTableau &t) const;

    /// rho((i i+1)), 1 <= i < n.
    const RealMatrix &adjacent(int i) const;
    /// rho((i j)) by the conjugation chain (i j) = (j-1 j) ... (i i+1) ... (j-1 j).
    const RealMatrix &transposition(Transposition t) const;
    RealMatrix permutation(const Permutation &p) const;
    /// Linear extension to the group algebra.
    Matrix element(const GroupAlgebraElement &x) const;

   private:
    Partition shape_;
    std::vector<StandardTableau> basis_;
    std::map<StandardTableau, Eigen::Index> index_;
    std::vector<RealMatrix> adjacent_;
    std::map<Transposition, RealMatrix> transpositions_;
};

/// Shared instance for a shape; safe to call from several threads.
const YoungOrthogonalRep &young_rep(const Partition &shape);

IrrepMatrix rep_adjacent(const Partition &shape, int i);
/// Throws std::invalid_argument when the element's degree differs from |shape|.
IrrepMatrix rep_element(const Partition &shape, const GroupAlgebraElement &x);

/// Row-major [re, im] pairs plus the tableau basis, for debugging dumps.
nlohmann::json to_json(const IrrepMatrix &m);

}  // namespace dfsgates

#endif
