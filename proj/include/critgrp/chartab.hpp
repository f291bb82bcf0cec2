#pragma once

// Character tables of finite groups: validation, the built-in symmetric and
// cyclic families, and distinguished class functions.

#include "critgrp/exactnum.hpp"
#include "critgrp/intlinalg.hpp"
#include "critgrp/young.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace critgrp {

struct ConjugacyClassInfo {
    std::string label;
    BigInt size;

    friend bool operator==(const ConjugacyClassInfo&, const ConjugacyClassInfo&) = default;
};

/// Built-in family a table came from, if any. Symmetric-family class labels
/// are cycle types such as "2,1,1".
struct TableFamily {
    std::string name;  // "symmetric" or "cyclic"
    long parameter = 0;

    friend bool operator==(const TableFamily&, const TableFamily&) = default;
};

/// Rows are irreducible characters, columns are conjugacy classes. After
/// normalization the trivial character is row 0 and the identity class is column 0.
struct CharacterTable {
    std::string group_name;
    BigInt order;
    long exponent = 1;
    std::vector<ConjugacyClassInfo> classes;
    CyclotomicMatrix values;
    std::size_t identity_class = 0;
    std::size_t trivial_char = 0;
    std::optional<TableFamily> family;

    std::size_t class_count() const { return classes.size(); }
    /// Column (chi_0(c), ..., chi_l(c)) of the table.
    CyclotomicVector column(std::size_t c) const {
        return values.col(static_cast<Eigen::Index>(c));
    }
    CyclotomicVector degrees() const { return column(0); }

    friend bool operator==(const CharacterTable& a, const CharacterTable& b);
};

struct Violation {
    std::string invariant;
    std::string detail;
};

/// Every broken table invariant; empty iff the table is a valid character table.
std::vector<Violation> validate(const CharacterTable& table);

/// Moves the all-ones row and the identity column to index 0 (other rows and
/// columns keep their relative order) and records the indices as 0.
/// Throws std::invalid_argument if no trivial row or identity column exists.
CharacterTable normalize(CharacterTable table);

/// (1/|G|) sum_c |c| a(c) conj(b(c)).
Cyclotomic inner_product(const CharacterTable& table, const CyclotomicVector& a,
                         const CyclotomicVector& b);

/// Conjugacy classes of S_n (cycle types) in table column order: the identity
/// (1^n) first, then the remaining cycle types in descending lexicographic order.
std::vector<Partition> symmetric_group_classes(int n);
/// Irreducibles of S_n in table row order: descending lexicographic, (n) first.
std::vector<Partition> symmetric_group_characters(int n);

/// Murnaghan-Nakayama value chi_lambda(mu).
BigInt murnaghan_nakayama(const Partition& lambda, const Partition& mu);

/// n!/z_mu.
BigInt class_size(const Partition& cycle_type);

/// Character table of S_n, 1 <= n <= 12.
CharacterTable symmetric_group_table(int n);
/// Character table of Z/m with chi_j(g^k) = zeta_m^(jk).
CharacterTable cyclic_group_table(long m);

/// A class function on a table's classes.
struct ClassFunction {
    CyclotomicVector values;

    std::size_t size() const { return static_cast<std::size_t>(values.size()); }
    const Cyclotomic& operator[](std::size_t i) const {
        return values(static_cast<Eigen::Index>(i));
    }
    /// Value at the identity class, as an integer.
    BigInt degree() const { return values(0).to_integer(); }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

ClassFunction character(const CharacterTable& table, std::size_t row);
/// Sum of the given rows (repetition allowed).
ClassFunction character_sum(const CharacterTable& table, const std::vector<std::size_t>& rows);
ClassFunction regular_character(const CharacterTable& table);
/// fix(sigma) - 1 on the classes of symmetric_group_table(n). Requires n >= 2.
ClassFunction reflection_character(int n);
/// fix(sigma) - 1 read off the cycle-type labels of a symmetric-family table,
/// whatever its column order.
ClassFunction reflection_character(const CharacterTable& table);

/// m_ij = <gamma chi_i, chi_j>. Throws NotACharacter unless every entry is a
/// nonnegative integer.
IntegerMatrix product_decomposition(const CharacterTable& table, const ClassFunction& gamma);

/// First non-identity class where gamma takes the value gamma(e), if any.
std::optional<std::size_t> kernel_witness(const CharacterTable& table, const ClassFunction& gamma);
bool is_faithful(const CharacterTable& table, const ClassFunction& gamma);
bool is_real_valued(const ClassFunction& gamma);
bool is_rational_valued(const ClassFunction& gamma);

}  // namespace critgrp
