#include <doctest.h>

#include <set>
#include <utility>

#include "hooktab/verify.hpp"
#include "oracles.hpp"

using namespace hooktab;

namespace {

NatMultiset from_counts(std::initializer_list<std::pair<unsigned, std::uint64_t>> items) {
    NatMultiset m;
    for (auto [v, mult] : items) m.add(v, mult);
    return m;
}

} // namespace

TEST_CASE("region multisets of the running example") {
    RegionMultisets m = region_multisets(oracle::kRunning, oracle::kRunningFrame);
    CHECK(m.H_NW == from_counts({{1, 5}, {2, 3}, {3, 2}, {4, 4}, {5, 1}, {6, 3}, {7, 1},
                                 {8, 1}, {9, 2}, {11, 1}, {12, 1}}));
    CHECK(m.H_SE == from_counts({{1, 5}, {2, 2}, {3, 2}, {4, 4}, {5, 1}, {6, 4}, {7, 1},
                                 {8, 2}, {9, 2}, {11, 1}}));
    CHECK(m.D_NW == from_counts({{1, 1}, {2, 2}, {3, 2}, {4, 3}, {5, 3}, {6, 3}, {7, 3},
                                 {8, 2}, {9, 2}, {10, 1}, {11, 1}, {12, 1}}));
    CHECK(m.D_SE == from_counts({{1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 3}, {6, 4}, {7, 3},
                                 {8, 3}, {9, 2}, {10, 1}, {11, 1}}));
    CHECK(m.D_SE.count(1) == 1);

    NatMultiset shared = m.H_NW + m.D_SE;
    CHECK(shared == from_counts({{1, 6}, {2, 4}, {3, 4}, {4, 7}, {5, 4}, {6, 7}, {7, 4},
                                 {8, 4}, {9, 4}, {10, 1}, {11, 2}, {12, 1}}));
    CHECK(shared.size() == 48);
    CHECK(shared == m.D_NW + m.H_SE);
}

TEST_CASE("region multisets of degenerate shapes") {
    RegionMultisets empty = region_multisets(Partition{}, Frame(2, 3));
    CHECK(empty.H_NW.empty());
    CHECK(empty.D_NW.empty());
    CHECK(empty.H_SE == from_counts({{1, 1}, {2, 2}, {3, 2}, {4, 1}}));
    CHECK(empty.D_SE == empty.H_SE);

    RegionMultisets full = region_multisets(Partition{3, 3}, Frame(2, 3));
    CHECK(full.H_SE.empty());
    CHECK(full.D_SE.empty());
    CHECK(full.H_NW == full.D_NW);

    CHECK_THROWS_AS(region_multisets(Partition{4}, Frame(2, 3)), std::invalid_argument);
}

TEST_CASE("theorem verification on the running example") {
    VerifyReport rep = verify_theorem(oracle::kRunning, oracle::kRunningFrame);
    CHECK(rep.passed);
    CHECK(rep.subject == "theorem: lambda=(7,5,4,3,3,2), frame=6x8");
    CHECK(rep.details.empty());
}

TEST_CASE("theorem verification on tiny frames") {
    CHECK(verify_theorem(Partition{}, Frame(1, 1)).passed);
    CHECK(verify_theorem(Partition{1}, Frame(1, 1)).passed);
}

TEST_CASE("theorem holds for every partition in a 5x5 frame") {
    auto all = oracle::partitions_in_frame(Frame(5, 5));
    REQUIRE(all.size() == 252);
    for (const Partition& lam : all) CHECK(verify_theorem(lam, Frame(5, 5)).passed);
}

TEST_CASE("lemma 2 on the running example and subject format") {
    VerifyReport rep = verify_lemma2(oracle::kRunning, oracle::kRunningFrame, {2, 6});
    CHECK(rep.passed);
    CHECK(rep.subject == "lemma2: lambda=(7,5,4,3,3,2), addbox=(2,6), frame=6x8");
}

TEST_CASE("lemma 2 across a 4x5 frame") {
    Frame f(4, 5);
    for (const Partition& lam : oracle::partitions_in_frame(f))
        for (Box b : addable_boxes(lam, f)) CHECK(verify_lemma2(lam, f, b).passed);
}

TEST_CASE("inductive step on the running example") {
    VerifyReport rep = verify_inductive_step(oracle::kRunning, oracle::kRunningFrame, {2, 6});
    CHECK(rep.passed);
    CHECK(rep.subject == "inductive: lambda=(7,5,4,3,3,2), addbox=(2,6), frame=6x8");
}

TEST_CASE("inductive step from the empty partition") {
    CHECK(verify_inductive_step(Partition{}, Frame(2, 2), {1, 1}).passed);
    CHECK(verify_inductive_step(Partition{}, Frame(1, 1), {1, 1}).passed);
}

TEST_CASE("inductive step where c-b+a collapses to 1") {
    // addbox (1,3) on (2) in 2x3 makes {1, c-b+a} the multiset {1,1}
    CHECK(verify_inductive_step(Partition{2}, Frame(2, 3), {1, 3}).passed);
}

TEST_CASE("inductive step rejects non-addable boxes") {
    CHECK_THROWS_AS(verify_inductive_step(Partition{2}, Frame(2, 3), {2, 2}),
                    std::invalid_argument);
}

TEST_CASE("inductive step across a 4x4 frame") {
    Frame f(4, 4);
    for (const Partition& lam : oracle::partitions_in_frame(f))
        for (Box b : addable_boxes(lam, f)) CHECK(verify_inductive_step(lam, f, b).passed);
}

TEST_CASE("bijection check on named shapes") {
    CHECK(verify_bijection(Partition{2, 1}, Frame(2, 2)).passed);
    CHECK(verify_bijection(Partition{}, Frame(3, 3)).passed);
    CHECK(verify_bijection(Partition{3, 3}, Frame(3, 3)).passed);
}

TEST_CASE("bijection check across small frames") {
    for (Frame f : {Frame(3, 3), Frame(2, 3), Frame(3, 2)})
        for (const Partition& lam : oracle::partitions_in_frame(f))
            CHECK(verify_bijection(lam, f).passed);
}

TEST_CASE("hook content identity on named shapes") {
    VerifyReport rep = verify_hcf_identity(oracle::kRunning, oracle::kRunningFrame);
    CHECK(rep.passed);
    CHECK(rep.subject == "hcf-identity: lambda=(7,5,4,3,3,2), frame=6x8");
    CHECK(verify_hcf_identity(Partition{}, Frame(2, 2)).passed);
    CHECK(verify_hcf_identity(Partition{3, 2, 1}, Frame(3, 3)).passed);
}

TEST_CASE("partition stream yields the documented 2x2 order") {
    PartitionStream s(Frame(2, 2));
    std::vector<Partition> expect = {Partition{}, Partition{1}, Partition{2},
                                     Partition{1, 1}, Partition{2, 1}, Partition{2, 2}};
    for (const Partition& e : expect) {
        auto got = s.next();
        REQUIRE(got.has_value());
        CHECK(*got == e);
    }
    CHECK_FALSE(s.next().has_value());
    CHECK_FALSE(s.next().has_value());
}

TEST_CASE("partition stream counts match binomial coefficients") {
    CHECK(enumerate_partitions_in_frame(Frame(1, 1)).size() == 2);
    CHECK(enumerate_partitions_in_frame(Frame(4, 4)).size() == 70);
    CHECK(enumerate_partitions_in_frame(Frame(5, 5)).size() == 252);
    CHECK(enumerate_partitions_in_frame(Frame(6, 8)).size() == 3003);
    for (unsigned r = 1; r <= 5; ++r)
        for (unsigned c = 1; c <= 5; ++c)
            CHECK(enumerate_partitions_in_frame(Frame(r, c)).size() ==
                  oracle::binomial(r + c, r));
}

TEST_CASE("partition stream is graded, lex-descending, and duplicate-free") {
    Frame f(4, 5);
    auto all = enumerate_partitions_in_frame(f);
    auto sorted_copy = oracle::partitions_in_frame(f);
    CHECK(all.size() == sorted_copy.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
        CHECK(fits(all[k], f));
        if (k == 0) continue;
        const Partition& prev = all[k - 1];
        const Partition& cur = all[k];
        CHECK(prev.size() <= cur.size());
        if (prev.size() == cur.size()) CHECK(prev.parts() > cur.parts());
    }
    std::set<std::vector<unsigned>> seen;
    for (const Partition& p : all) seen.insert(p.parts());
    CHECK(seen.size() == all.size());
}

TEST_CASE("verify_frame sweeps every check across a 4x4 frame") {
    FrameReport rep = verify_frame(Frame(4, 4), CheckSelection::all(), 2);
    CHECK(rep.partitions == 70);
    CHECK(rep.all_passed);
    CHECK(rep.checks_run == rep.checks_passed);
    CHECK_FALSE(rep.first_failure.has_value());
    // theorem + bijection + hcf once per partition, the step checks once
    // per addable box
    std::uint64_t addable_total = 0;
    for (const Partition& lam : oracle::partitions_in_frame(Frame(4, 4)))
        addable_total += addable_boxes(lam, Frame(4, 4)).size();
    CHECK(rep.checks_run == 3 * 70 + 2 * addable_total);
}

TEST_CASE("verify_frame on a single-box frame") {
    CheckSelection only_theorem;
    only_theorem.theorem = true;
    FrameReport rep = verify_frame(Frame(1, 1), only_theorem, 1);
    CHECK(rep.partitions == 2);
    CHECK(rep.checks_run == 2);
    CHECK(rep.checks_passed == 2);
    CHECK(rep.all_passed);
}

TEST_CASE("verify_frame aggregate does not depend on the worker count") {
    CheckSelection checks;
    checks.theorem = true;
    checks.lemma2 = true;
    FrameReport one = verify_frame(Frame(4, 4), checks, 1);
    FrameReport four = verify_frame(Frame(4, 4), checks, 4);
    CHECK(one.partitions == four.partitions);
    CHECK(one.checks_run == four.checks_run);
    CHECK(one.checks_passed == four.checks_passed);
    CHECK(one.all_passed == four.all_passed);
    CHECK(one.first_failure.has_value() == four.first_failure.has_value());
}

TEST_CASE("verify_frame enforces sweep caps unless forced") {
    CHECK_THROWS_AS(verify_frame(Frame(9, 9), CheckSelection::all(), 1),
                    std::invalid_argument);
    CheckSelection bij;
    bij.bijection = true;
    CHECK_THROWS_AS(verify_frame(Frame(5, 5), bij, 1), std::invalid_argument);

    CheckSelection thm;
    thm.theorem = true;
    CHECK_NOTHROW(verify_frame(Frame(5, 5), thm, 1));
    FrameReport forced = verify_frame(Frame(9, 2), thm, 2, true);
    CHECK(forced.partitions == oracle::binomial(11, 2));
    CHECK(forced.all_passed);
}

TEST_CASE("verify_frame requires at least one check") {
    CHECK_THROWS_AS(verify_frame(Frame(2, 2), CheckSelection{}, 1), std::invalid_argument);
}
