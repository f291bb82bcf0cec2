#include "critgrp/chartab.hpp"
#include "critgrp/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace critgrp;

namespace {

Cyclotomic z(long m, long k = 1) { return Cyclotomic::zeta(m, k); }

// The S4 table as printed in the paper, columns e, (12), (123), (1234), (12)(34).
const long kPaperS4[5][5] = {
    {1, 1, 1, 1, 1}, {3, 1, 0, -1, -1}, {2, 0, -1, 0, 2}, {3, -1, 0, 1, -1}, {1, -1, 1, -1, 1},
};
const long kPaperS4Sizes[5] = {1, 6, 8, 6, 3};
// Our column for each paper column: (1^4), (4), (3,1), (2,2), (2,1,1) order.
const Eigen::Index kPaperToOurs[5] = {0, 4, 2, 1, 3};

// Fixed points of a permutation with the given cycle type.
long fixed_points(const Partition& mu) { return mu.multiplicity(1); }

CharacterTable trivial_group_table() {
    CharacterTable t;
    t.group_name = "1";
    t.order = 1;
    t.exponent = 1;
    t.classes = {{"e", 1}};
    t.values = CyclotomicMatrix::Constant(1, 1, Cyclotomic(1));
    return t;
}

}  // namespace

TEST_CASE("S4 table matches the paper up to column order") {
    const CharacterTable t = symmetric_group_table(4);
    REQUIRE(t.class_count() == 5);
    CHECK(t.order == 24);
    CHECK(t.exponent == 12);
    CHECK(t.group_name == "S4");
    for (int pc = 0; pc < 5; ++pc) {
        const Eigen::Index c = kPaperToOurs[pc];
        CHECK(t.classes[static_cast<std::size_t>(c)].size == kPaperS4Sizes[pc]);
        for (int r = 0; r < 5; ++r) {
            CAPTURE(r);
            CAPTURE(pc);
            CHECK(t.values(r, c) == Cyclotomic(kPaperS4[r][pc]));
        }
    }
    CHECK(validate(t).empty());
}

TEST_CASE("validation reports broken invariants") {
    CHECK(validate(trivial_group_table()).empty());

    CharacterTable t = symmetric_group_table(4);
    // chi_2 at (123) is -1 in the paper; flip it to 1.
    REQUIRE(t.values(2, 2) == Cyclotomic(-1));
    t.values(2, 2) = Cyclotomic(1);
    const auto v = validate(t);
    REQUIRE_FALSE(v.empty());
    const bool names_chi2 = std::any_of(v.begin(), v.end(), [](const Violation& x) {
        return x.invariant == "row orthogonality" && x.detail.find("chi_2") != std::string::npos;
    });
    CHECK(names_chi2);
    // The flip keeps |chi_2(123)|^2, so chi_2 still has norm 1; chi_0 and chi_4 now
    // pair with it to (2 + 8 + 6)/24 = 2/3.
    const CyclotomicVector chi2 = t.values.row(2).transpose();
    CHECK(inner_product(t, chi2, chi2) == Cyclotomic(1));
    CHECK(inner_product(t, t.values.row(0).transpose(), chi2) == Cyclotomic(Rational(2, 3)));
    CHECK(v.size() == 2);

    CharacterTable bad_sizes = symmetric_group_table(3);
    bad_sizes.classes[1].size += 1;
    CHECK_FALSE(validate(bad_sizes).empty());

    CharacterTable bad_degree = symmetric_group_table(3);
    bad_degree.values(1, 0) = Cyclotomic(Rational(1, 2));
    CHECK_FALSE(validate(bad_degree).empty());

    CharacterTable not_square = symmetric_group_table(3);
    not_square.classes.pop_back();
    CHECK_FALSE(validate(not_square).empty());
}

TEST_CASE("normalization moves the trivial row and identity column first") {
    CharacterTable t = symmetric_group_table(3);
    // Swap rows 0 and 2 and columns 0 and 1.
    t.values.row(0).swap(t.values.row(2));
    t.values.col(0).swap(t.values.col(1));
    std::swap(t.classes[0], t.classes[1]);
    const CharacterTable n = normalize(t);
    CHECK(n.identity_class == 0);
    CHECK(n.trivial_char == 0);
    CHECK(validate(n).empty());
    for (Eigen::Index c = 0; c < 3; ++c) CHECK(n.values(0, c) == Cyclotomic(1));
    CHECK(n.classes[0].size == 1);

    CharacterTable no_trivial = symmetric_group_table(3);
    no_trivial.values(0, 1) = Cyclotomic(2);
    CHECK_THROWS_AS(normalize(no_trivial), std::invalid_argument);
}

TEST_CASE("symmetric group tables") {
    const CharacterTable t1 = symmetric_group_table(1);
    CHECK(t1.class_count() == 1);
    CHECK(t1.values(0, 0) == Cyclotomic(1));
    CHECK_THROWS_AS(symmetric_group_table(0), OutOfRange);
    CHECK_THROWS_AS(symmetric_group_table(13), OutOfRange);

    const CharacterTable t5 = symmetric_group_table(5);
    CHECK(t5.class_count() == 7);
    CHECK(validate(t5).empty());
    const auto chars = symmetric_group_characters(5);
    const auto classes = symmetric_group_classes(5);
    const auto row = static_cast<Eigen::Index>(std::find(chars.begin(), chars.end(), Partition({4, 1})) - chars.begin());
    for (std::size_t c = 0; c < classes.size(); ++c)
        CHECK(t5.values(row, static_cast<Eigen::Index>(c)) == Cyclotomic(fixed_points(classes[c]) - 1));
}

TEST_CASE("symmetric tables are valid and column-orthogonal") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const CharacterTable t = symmetric_group_table(n);
        CHECK(validate(t).empty());
        const auto k = static_cast<Eigen::Index>(t.class_count());
        for (Eigen::Index c = 0; c < k; ++c)
            for (Eigen::Index d = c; d < k; ++d) {
                // Entries are integers, so conjugation is the identity here.
                BigInt s = 0;
                for (Eigen::Index i = 0; i < k; ++i) s += t.values(i, c).to_integer() * t.values(i, d).to_integer();
                const BigInt expected = c == d ? BigInt(t.order / t.classes[static_cast<std::size_t>(c)].size) : BigInt(0);
                CHECK(s == expected);
            }
    }
}

TEST_CASE("reflection row equals fix - 1") {
    for (int n = 2; n <= 8; ++n) {
        const CharacterTable t = symmetric_group_table(n);
        const auto chars = symmetric_group_characters(n);
        std::vector<int> parts{n - 1, 1};
        if (n == 2) parts = {1, 1};
        const auto row = static_cast<std::size_t>(std::find(chars.begin(), chars.end(), Partition(parts)) - chars.begin());
        const ClassFunction refl = reflection_character(n);
        if (n > 2) CHECK(character(t, row) == refl);
        const auto classes = symmetric_group_classes(n);
        for (std::size_t c = 0; c < classes.size(); ++c) CHECK(refl[c] == Cyclotomic(fixed_points(classes[c]) - 1));
        CHECK(reflection_character(t) == refl);
    }
    CHECK(reflection_character(4).values.transpose() ==
          CyclotomicVector::Map(std::vector<Cyclotomic>{3, -1, 0, -1, 1}.data(), 5).transpose());
    CHECK(reflection_character(2).values == CyclotomicVector::Map(std::vector<Cyclotomic>{1, -1}.data(), 2));
    CHECK_THROWS_AS(reflection_character(1), OutOfRange);
    CHECK_THROWS_AS(reflection_character(cyclic_group_table(4)), std::invalid_argument);

    const auto classes5 = symmetric_group_classes(5);
    const auto c221 = static_cast<std::size_t>(std::find(classes5.begin(), classes5.end(), Partition({2, 2, 1})) - classes5.begin());
    CHECK(reflection_character(5)[c221] == Cyclotomic(0));
}

TEST_CASE("murnaghan-nakayama and class sizes") {
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({2, 2})) == 2);
    CHECK(murnaghan_nakayama(Partition({2, 2}), Partition({3, 1})) == -1);
    CHECK(murnaghan_nakayama(Partition({1, 1, 1, 1}), Partition({4})) == -1);
    CHECK(murnaghan_nakayama(Partition({3, 2}), Partition({1, 1, 1, 1, 1})) == 5);
    CHECK(class_size(Partition({2, 1, 1})) == 6);
    CHECK(class_size(Partition({2, 2})) == 3);
    CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
    // Sizes sum to n! for every n.
    BigInt fact = 1;
    for (int n = 1; n <= 12; ++n) {
        fact *= n;
        BigInt s = 0;
        for (const auto& mu : symmetric_group_classes(n)) s += class_size(mu);
        CHECK(s == fact);
    }
}

TEST_CASE("cyclic group tables") {
    const CharacterTable t1 = cyclic_group_table(1);
    CHECK(t1.class_count() == 1);
    CHECK(validate(t1).empty());

    const CharacterTable t2 = cyclic_group_table(2);
    CHECK(t2.values(0, 1) == Cyclotomic(1));
    CHECK(t2.values(1, 1) == Cyclotomic(-1));

    const CharacterTable t4 = cyclic_group_table(4);
    CHECK(t4.values(1, 1) == z(4));
    CHECK(t4.values(1, 2) == Cyclotomic(-1));
    CHECK(t4.values(1, 3) == -z(4));
    CHECK(t4.exponent == 4);
    for (long m = 1; m <= 24; ++m) {
        const CharacterTable t = cyclic_group_table(m);
        CHECK(validate(t).empty());
        for (const auto& c : t.classes) CHECK(c.size == 1);
    }
    CHECK_THROWS(cyclic_group_table(0));
}

TEST_CASE("inner products") {
    const CharacterTable t = cyclic_group_table(6);
    for (Eigen::Index i = 0; i < 6; ++i)
        for (Eigen::Index j = 0; j < 6; ++j)
            CHECK(inner_product(t, t.values.row(i).transpose(), t.values.row(j).transpose()) == Cyclotomic(i == j ? 1 : 0));
}

TEST_CASE("product decomposition") {
    const CharacterTable t = symmetric_group_table(4);
    CHECK(product_decomposition(t, reflection_character(4)) == fixture::s4_fusion());
    CHECK(product_decomposition(t, character(t, 0)) == IntegerMatrix::Identity(5, 5));

    const IntegerMatrix reg = product_decomposition(t, regular_character(t));
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j)
            CHECK(reg(i, j) == t.values(i, 0).to_integer() * t.values(j, 0).to_integer());

    // Row sums: sum_j m_ij deg(chi_j) = n deg(chi_i).
    for (int n = 2; n <= 7; ++n) {
        const CharacterTable s = symmetric_group_table(n);
        for (std::size_t g = 0; g < s.class_count(); ++g) {
            const ClassFunction gamma = character(s, g);
            const IntegerMatrix M = product_decomposition(s, gamma);
            for (Eigen::Index i = 0; i < M.rows(); ++i) {
                BigInt sum = 0;
                for (Eigen::Index j = 0; j < M.cols(); ++j) sum += M(i, j) * s.values(j, 0).to_integer();
                CHECK(sum == gamma.degree() * s.values(i, 0).to_integer());
            }
        }
    }

    ClassFunction half{CyclotomicVector::Constant(5, Cyclotomic(Rational(1, 2)))};
    CHECK_THROWS_AS(product_decomposition(t, half), NotACharacter);
    ClassFunction negative = character(t, 0);
    negative.values *= Cyclotomic(-1);
    CHECK_THROWS_AS(product_decomposition(t, negative), NotACharacter);
}

TEST_CASE("distinguished characters") {
    const CharacterTable s4 = symmetric_group_table(4);
    const ClassFunction reg = regular_character(s4);
    CHECK(reg[0] == Cyclotomic(24));
    for (std::size_t c = 1; c < 5; ++c) CHECK(reg[c].is_zero());
    CHECK(regular_character(trivial_group_table()).values == CyclotomicVector::Constant(1, Cyclotomic(1)));
    const ClassFunction reg3 = regular_character(cyclic_group_table(3));
    CHECK(reg3[0] == Cyclotomic(3));
    CHECK(reg3[1].is_zero());
    CHECK(reg3[2].is_zero());

    const CharacterTable z6 = cyclic_group_table(6);
    const ClassFunction sum = character_sum(z6, {1, 5});
    for (std::size_t k = 0; k < 6; ++k) CHECK(sum[k] == z(6, static_cast<long>(k)) + z(6, -static_cast<long>(k)));
    CHECK_THROWS_AS(character(z6, 6), OutOfRange);
}

TEST_CASE("faithfulness and value fields") {
    const CharacterTable s4 = symmetric_group_table(4);
    CHECK(is_faithful(s4, reflection_character(4)));
    CHECK_FALSE(is_faithful(s4, character(s4, 2)));
    // chi_2 takes its degree 2 at (12)(34), our class 3.
    CHECK(kernel_witness(s4, character(s4, 2)) == std::optional<std::size_t>(3));
    CHECK_FALSE(is_faithful(s4, character(s4, 0)));
    CHECK_FALSE(is_faithful(cyclic_group_table(5), character(cyclic_group_table(5), 0)));
    CHECK(is_faithful(trivial_group_table(), character(trivial_group_table(), 0)));

    CHECK(is_real_valued(reflection_character(4)));
    CHECK(is_rational_valued(reflection_character(4)));
    const CharacterTable z4 = cyclic_group_table(4);
    CHECK_FALSE(is_real_valued(character(z4, 1)));
    CHECK_FALSE(is_rational_valued(character(z4, 1)));
    CHECK(is_real_valued(regular_character(z4)));
    CHECK(is_rational_valued(regular_character(z4)));
    // zeta_5 + zeta_5^-1 is real but irrational.
    const ClassFunction golden = character_sum(cyclic_group_table(5), {1, 4});
    CHECK(is_real_valued(golden));
    CHECK_FALSE(is_rational_valued(golden));
}

TEST_CASE("table equality") {
    CHECK(symmetric_group_table(5) == symmetric_group_table(5));
    CHECK_FALSE(symmetric_group_table(4) == symmetric_group_table(5));
    CharacterTable t = cyclic_group_table(3);
    CHECK(t == cyclic_group_table(3));
    t.classes[1].label = "x";
    CHECK_FALSE(t == cyclic_group_table(3));
}
