#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hooktab/hooks.hpp"
#include "hooktab/natmultiset.hpp"
#include "hooktab/partition.hpp"

namespace hooktab {

struct VerifyReport {
    std::string subject;
    bool passed = false;
    std::string details;  // empty on success
};

// Hook and distance multisets split by region.
struct RegionMultisets {
    NatMultiset H_NW;  // hooks over [lambda]
    NatMultiset H_SE;  // hooks over D \ [lambda]
    NatMultiset D_NW;  // distances over [lambda]
    NatMultiset D_SE;  // distances over D \ [lambda]
};

[[nodiscard]] RegionMultisets region_multisets(const Partition& lambda, const Frame& frame);

// H_NW u D_SE = D_NW u H_SE, i.e. the two tableaux share one multiset.
[[nodiscard]] VerifyReport verify_theorem(const Partition& lambda, const Frame& frame);

// R u R' = {1..r-a+b-1} and C u C' = {1..c-b+a-1}, disjointly.
[[nodiscard]] VerifyReport verify_lemma2(const Partition& lambda, const Frame& frame, Box addbox);

// Box-by-box hook-update laws plus the two multiset equations of the
// induction, plus the distance updates.
[[nodiscard]] VerifyReport verify_inductive_step(const Partition& lambda, const Frame& frame,
                                                 Box addbox);

// king_complement is a weight-complementing bijection onto SSYT of the
// complementary shape.
[[nodiscard]] VerifyReport verify_bijection(const Partition& lambda, const Frame& frame);

// prod(q^d - 1) over inside times prod(q^h - 1) over outside equals the
// swapped product, exactly; recovering both exponent multisets must agree.
[[nodiscard]] VerifyReport verify_hcf_identity(const Partition& lambda, const Frame& frame);

// Lazy stream of all partitions fitting the frame: size ascending, then
// lexicographically descending.  Total count is C(r+c, r).
class PartitionStream {
public:
    explicit PartitionStream(Frame frame);

    [[nodiscard]] std::optional<Partition> next();

private:
    [[nodiscard]] bool first_of_size(std::uint64_t n);
    [[nodiscard]] bool next_of_same_size();

    Frame frame_;
    std::uint64_t target_ = 0;
    bool fresh_ = true;
    bool done_ = false;
    std::vector<unsigned> parts_;
};

[[nodiscard]] std::vector<Partition> enumerate_partitions_in_frame(const Frame& frame);

struct CheckSelection {
    bool theorem = false;
    bool lemma2 = false;
    bool inductive = false;
    bool bijection = false;
    bool hcf = false;

    [[nodiscard]] static CheckSelection all() { return {true, true, true, true, true}; }
    [[nodiscard]] bool any() const { return theorem || lemma2 || inductive || bijection || hcf; }
};

struct FrameReport {
    Frame frame;
    std::uint64_t partitions = 0;       // partitions visited
    std::uint64_t checks_run = 0;       // individual check invocations
    std::uint64_t checks_passed = 0;
    bool all_passed = false;
    std::optional<VerifyReport> first_failure;  // smallest enumeration index
};

// Default desk-scale caps for sweeps; larger frames need allow_large.
inline constexpr unsigned kSweepCap = 8;
inline constexpr unsigned kSsytSweepCap = 4;

// Runs the selected checks over every partition in the frame (and every
// addable box for the step checks), fanning out over `jobs` workers.
// The aggregate is deterministic regardless of scheduling.
[[nodiscard]] FrameReport verify_frame(const Frame& frame, const CheckSelection& checks,
                                       unsigned jobs = 1, bool allow_large = false);

} // namespace hooktab
