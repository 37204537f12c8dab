#include "hooktab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "hooktab/schur.hpp"
#include "hooktab/ssyt.hpp"

namespace hooktab {

namespace {

std::string frame_str(const Frame& f) {
    return std::to_string(f.r) + "x" + std::to_string(f.c);
}

std::string subject_str(const char* check, const Partition& lambda, const Frame& frame) {
    return std::string(check) + ": lambda=(" + lambda.to_string() + "), frame=" + frame_str(frame);
}

std::string subject_str(const char* check, const Partition& lambda, Box b, const Frame& frame) {
    return std::string(check) + ": lambda=(" + lambda.to_string() + "), addbox=(" +
           std::to_string(b.i) + "," + std::to_string(b.j) + "), frame=" + frame_str(frame);
}

std::string multiset_mismatch(const char* lhs_name, const NatMultiset& lhs,
                              const char* rhs_name, const NatMultiset& rhs) {
    auto d = lhs.first_difference(rhs);
    std::string out = "multisets differ";
    if (d)
        out += " first at value " + std::to_string(*d) + " (" + lhs_name + " has " +
               std::to_string(lhs.count(*d)) + ", " + rhs_name + " has " +
               std::to_string(rhs.count(*d)) + ")";
    out += "; " + std::string(lhs_name) + "=" + lhs.to_string() + ", " + rhs_name + "=" +
           rhs.to_string();
    return out;
}

VerifyReport pass(std::string subject) { return {std::move(subject), true, ""}; }

VerifyReport fail(std::string subject, std::string details) {
    return {std::move(subject), false, std::move(details)};
}

} // namespace

RegionMultisets region_multisets(const Partition& lambda, const Frame& frame) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    RegionMultisets m;
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= frame.c; ++j) {
            Box b{i, j};
            if (lambda.contains_box(b)) {
                m.H_NW.add(hook_length(lambda, frame, b));
                m.D_NW.add(distance(lambda, frame, b));
            } else {
                m.H_SE.add(hook_length(lambda, frame, b));
                m.D_SE.add(distance(lambda, frame, b));
            }
        }
    return m;
}

VerifyReport verify_theorem(const Partition& lambda, const Frame& frame) {
    std::string subject = subject_str("theorem", lambda, frame);
    RegionMultisets m = region_multisets(lambda, frame);
    NatMultiset lhs = m.H_NW + m.D_SE;  // hook/distance entries
    NatMultiset rhs = m.D_NW + m.H_SE;  // distance/hook entries
    if (lhs == rhs) return pass(std::move(subject));
    return fail(std::move(subject), multiset_mismatch("hook/distance", lhs, "distance/hook", rhs));
}

VerifyReport verify_lemma2(const Partition& lambda, const Frame& frame, Box addbox) {
    std::string subject = subject_str("lemma2", lambda, addbox, frame);
    const auto [a, b] = addbox;
    Lemma2Sets s = lemma2_sets(lambda, frame, addbox);
    if (s.R.size() != b - 1 || s.R_prime.size() != frame.r - a || s.C.size() != a - 1 ||
        s.C_prime.size() != frame.c - b)
        return fail(std::move(subject), "set cardinalities differ from b-1, r-a, a-1, c-b");
    NatMultiset rows = s.R + s.R_prime;
    NatMultiset cols = s.C + s.C_prime;
    if (!rows.is_set())
        return fail(std::move(subject), "R and R' are not disjoint: " + rows.to_string());
    if (!cols.is_set())
        return fail(std::move(subject), "C and C' are not disjoint: " + cols.to_string());
    NatMultiset row_range = NatMultiset::range(1, frame.r - a + b - 1);
    NatMultiset col_range = NatMultiset::range(1, frame.c - b + a - 1);
    if (rows != row_range)
        return fail(std::move(subject), multiset_mismatch("R u R'", rows, "{1..r-a+b-1}", row_range));
    if (cols != col_range)
        return fail(std::move(subject), multiset_mismatch("C u C'", cols, "{1..c-b+a-1}", col_range));
    return pass(std::move(subject));
}

VerifyReport verify_inductive_step(const Partition& lambda, const Frame& frame, Box addbox) {
    std::string subject = subject_str("inductive", lambda, addbox, frame);
    if (!is_addable(lambda, frame, addbox))
        throw std::invalid_argument("box is not addable");
    const auto [a, b] = addbox;
    Partition mu = add_box(lambda, addbox);

    // (a) hook-update case laws, box by box
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= frame.c; ++j) {
            Box box{i, j};
            bool one_match = (i == a) != (j == b);
            unsigned h_new = hook_length(mu, frame, box);
            if (mu.contains_box(box)) {
                unsigned expect = (i == a && j == b) ? 1
                                  : one_match        ? hook_length(lambda, frame, box) + 1
                                                     : hook_length(lambda, frame, box);
                if (h_new != expect)
                    return fail(std::move(subject),
                                "hook-update law fails inside at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): got " + std::to_string(h_new) +
                                    ", expected " + std::to_string(expect));
            } else {
                unsigned h_old = hook_length(lambda, frame, box);
                unsigned expect = one_match ? h_old - 1 : h_old;
                if (h_new != expect)
                    return fail(std::move(subject),
                                "hook-update law fails outside at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "): got " + std::to_string(h_new) +
                                    ", expected " + std::to_string(expect));
            }
        }

    // (b) the two hook multiset equations
    Lemma2Sets s = lemma2_sets(lambda, frame, addbox);
    NatMultiset Y = s.R.shifted_up() + s.C.shifted_up() + s.R_prime + s.C_prime;
    NatMultiset Z = NatMultiset::range(1, frame.r - a + b - 1) +
                    NatMultiset::range(2, frame.c - b + a);
    RegionMultisets before = region_multisets(lambda, frame);
    RegionMultisets after = region_multisets(mu, frame);

    NatMultiset lhs1 = after.H_NW + Z;
    lhs1.add(1);
    NatMultiset rhs1 = before.H_NW + Y;
    rhs1.add(1);
    rhs1.add(frame.c - b + a);
    if (lhs1 != rhs1)
        return fail(std::move(subject),
                    multiset_mismatch("H'_NW u Z u {1}", lhs1, "H_NW u Y u {1,c-b+a}", rhs1));

    NatMultiset lhs2 = after.H_SE + Z;
    lhs2.add(frame.r - a + b);
    NatMultiset rhs2 = before.H_SE + Y;
    if (lhs2 != rhs2)
        return fail(std::move(subject),
                    multiset_mismatch("H'_SE u Z u {r-a+b}", lhs2, "H_SE u Y", rhs2));

    // (c) distance updates
    NatMultiset lhs3 = after.D_SE;
    lhs3.add(frame.c - b + a);
    if (lhs3 != before.D_SE)
        return fail(std::move(subject),
                    multiset_mismatch("D'_SE u {c-b+a}", lhs3, "D_SE", before.D_SE));
    NatMultiset rhs4 = before.D_NW;
    rhs4.add(frame.r - a + b);
    if (after.D_NW != rhs4)
        return fail(std::move(subject),
                    multiset_mismatch("D'_NW", after.D_NW, "D_NW u {r-a+b}", rhs4));

    return pass(std::move(subject));
}

VerifyReport verify_bijection(const Partition& lambda, const Frame& frame) {
    std::string subject = subject_str("bijection", lambda, frame);
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    const unsigned r = frame.r;
    const std::uint64_t target = static_cast<std::uint64_t>(r) * frame.c * (r + 1) / 2;
    Partition comp = complement(lambda, frame);

    std::set<std::vector<std::vector<unsigned>>> images;
    std::uint64_t count = 0;
    SsytStream stream(lambda, r);
    while (auto t = stream.next()) {
        ++count;
        SSYT img = king_complement(*t, frame);
        if (img.shape != comp)
            return fail(std::move(subject), "image shape is not the complement shape");
        if (!is_semistandard(img.shape, img.rows, r))
            return fail(std::move(subject), "image of a tableau is not semistandard");
        if (weight(*t) + weight(img) != target)
            return fail(std::move(subject),
                        "weight identity fails: " + std::to_string(weight(*t)) + " + " +
                            std::to_string(weight(img)) + " != " + std::to_string(target));
        images.insert(img.rows);
    }
    if (images.size() != count)
        return fail(std::move(subject), "king_complement is not injective");

    std::uint64_t comp_count = 0;
    SsytStream comp_stream(comp, r);
    while (comp_stream.next()) ++comp_count;
    if (comp_count != count)
        return fail(std::move(subject),
                    "image count " + std::to_string(count) + " != |SSYT_r(complement)| " +
                        std::to_string(comp_count));
    return pass(std::move(subject));
}

VerifyReport verify_hcf_identity(const Partition& lambda, const Frame& frame) {
    std::string subject = subject_str("hcf-identity", lambda, frame);
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    QPoly lhs = QPoly::one();
    QPoly rhs = QPoly::one();
    for (unsigned i = 1; i <= frame.r; ++i)
        for (unsigned j = 1; j <= frame.c; ++j) {
            Box b{i, j};
            unsigned h = hook_length(lambda, frame, b);
            unsigned d = distance(lambda, frame, b);
            if (lambda.contains_box(b)) {
                lhs = poly_mul(lhs, QPoly::geometric_factor(d));
                rhs = poly_mul(rhs, QPoly::geometric_factor(h));
            } else {
                lhs = poly_mul(lhs, QPoly::geometric_factor(h));
                rhs = poly_mul(rhs, QPoly::geometric_factor(d));
            }
        }
    if (lhs != rhs)
        return fail(std::move(subject), "side polynomials differ: lhs=" + lhs.to_string() +
                                            ", rhs=" + rhs.to_string());
    NatMultiset lm = recover_exponent_multiset(lhs);
    NatMultiset rm = recover_exponent_multiset(rhs);
    if (lm != rm)
        return fail(std::move(subject), multiset_mismatch("recovered lhs", lm, "recovered rhs", rm));
    return pass(std::move(subject));
}

PartitionStream::PartitionStream(Frame frame) : frame_(frame) {}

bool PartitionStream::first_of_size(std::uint64_t n) {
    // Lex-greatest: fill each row with as much as possible.
    if (n > static_cast<std::uint64_t>(frame_.r) * frame_.c) return false;
    parts_.clear();
    std::uint64_t left = n;
    while (left > 0) {
        unsigned take = static_cast<unsigned>(std::min<std::uint64_t>(left, frame_.c));
        parts_.push_back(take);
        left -= take;
    }
    return true;
}

bool PartitionStream::next_of_same_size() {
    // Successor in descending lex order: decrement the rightmost part
    // that still lets the tail absorb the remainder, then refill the
    // tail greedily.
    if (parts_.empty()) return false;
    std::uint64_t suffix = 0;
    for (std::size_t k = parts_.size(); k-- > 0;) {
        suffix += parts_[k];
        unsigned v = parts_[k] - 1;
        if (v == 0) continue;
        std::uint64_t rest = suffix - v;
        std::uint64_t capacity = static_cast<std::uint64_t>(v) * (frame_.r - k - 1);
        if (rest > capacity) continue;
        parts_.resize(k);
        parts_.push_back(v);
        while (rest > 0) {
            unsigned take = static_cast<unsigned>(std::min<std::uint64_t>(rest, v));
            parts_.push_back(take);
            rest -= take;
        }
        return true;
    }
    return false;
}

std::optional<Partition> PartitionStream::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        target_ = 0;
        parts_.clear();  // the empty partition
        return Partition{};
    }
    if (next_of_same_size()) return Partition(parts_);
    ++target_;
    if (!first_of_size(target_)) {
        done_ = true;
        return std::nullopt;
    }
    return Partition(parts_);
}

std::vector<Partition> enumerate_partitions_in_frame(const Frame& frame) {
    std::vector<Partition> out;
    PartitionStream stream(frame);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

namespace {

struct WorkerResult {
    std::uint64_t checks_run = 0;
    std::uint64_t checks_passed = 0;
    std::size_t failure_index = SIZE_MAX;  // partition index of first failure
    VerifyReport failure;
};

void run_checks_for(const Partition& lambda, const Frame& frame, const CheckSelection& checks,
                    std::size_t index, WorkerResult& out) {
    auto record = [&](const VerifyReport& rep) {
        ++out.checks_run;
        if (rep.passed) {
            ++out.checks_passed;
        } else if (index < out.failure_index) {
            out.failure_index = index;
            out.failure = rep;
        }
    };
    if (checks.theorem) record(verify_theorem(lambda, frame));
    if (checks.lemma2)
        for (Box b : addable_boxes(lambda, frame)) record(verify_lemma2(lambda, frame, b));
    if (checks.inductive)
        for (Box b : addable_boxes(lambda, frame)) record(verify_inductive_step(lambda, frame, b));
    if (checks.bijection) record(verify_bijection(lambda, frame));
    if (checks.hcf) record(verify_hcf_identity(lambda, frame));
}

} // namespace

FrameReport verify_frame(const Frame& frame, const CheckSelection& checks, unsigned jobs,
                         bool allow_large) {
    if (!checks.any())
        throw std::invalid_argument("no checks selected");
    if (!allow_large) {
        if (frame.r > kSweepCap || frame.c > kSweepCap)
            throw std::invalid_argument("frame exceeds the default sweep cap of 8; force to override");
        if (checks.bijection && (frame.r > kSsytSweepCap || frame.c > kSsytSweepCap))
            throw std::invalid_argument(
                "bijection sweeps exceed the default cap of 4; force to override");
    }

    std::vector<Partition> all = enumerate_partitions_in_frame(frame);
    FrameReport report{frame, all.size(), 0, 0, false, std::nullopt};

    unsigned workers = std::max(1u, jobs);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, all.size()));

    std::atomic<std::size_t> cursor{0};
    std::mutex merge_mutex;
    std::size_t best_failure = SIZE_MAX;

    auto work = [&]() {
        WorkerResult local;
        for (;;) {
            std::size_t k = cursor.fetch_add(1);
            if (k >= all.size()) break;
            run_checks_for(all[k], frame, checks, k, local);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        report.checks_run += local.checks_run;
        report.checks_passed += local.checks_passed;
        if (local.failure_index < best_failure) {
            best_failure = local.failure_index;
            report.first_failure = local.failure;
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    report.all_passed = report.checks_passed == report.checks_run && !report.first_failure;
    return report;
}

} // namespace hooktab
