#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "hooktab/render.hpp"
#include "hooktab/schur.hpp"
#include "hooktab/verify.hpp"

namespace {

using namespace hooktab;

// Exit codes: 0 success, 1 verification failure, 2 argument parse error,
// 3 domain precondition failure.
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<unsigned> parse_uint_list(const std::string& text, const char* what) {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw ParseFailure(std::string("invalid ") + what + ": '" + tok + "'");
        }
        if (used != tok.size() || v == 0 || v > 1000000)
            throw ParseFailure(std::string("invalid ") + what + ": '" + tok + "'");
        out.push_back(static_cast<unsigned>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    try {
        return Partition(parse_uint_list(text, "partition part"));
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(std::string("invalid partition: ") + e.what());
    }
}

Frame parse_frame(const std::string& text) {
    std::size_t x = text.find('x');
    if (x == std::string::npos)
        throw ParseFailure("invalid frame '" + text + "': expected RxC");
    try {
        auto rs = parse_uint_list(text.substr(0, x), "frame dimension");
        auto cs = parse_uint_list(text.substr(x + 1), "frame dimension");
        if (rs.size() != 1 || cs.size() != 1)
            throw ParseFailure("invalid frame '" + text + "': expected RxC");
        return Frame(rs[0], cs[0]);
    } catch (const std::invalid_argument& e) {
        throw ParseFailure(std::string("invalid frame: ") + e.what());
    }
}

Box parse_box(const std::string& text) {
    auto v = parse_uint_list(text, "box coordinate");
    if (v.size() != 2) throw ParseFailure("invalid box '" + text + "': expected i,j");
    return Box{v[0], v[1]};
}

CheckSelection parse_checks(const std::string& text) {
    CheckSelection sel;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string name = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (name == "theorem")
            sel.theorem = true;
        else if (name == "lemma2")
            sel.lemma2 = true;
        else if (name == "inductive")
            sel.inductive = true;
        else if (name == "bijection")
            sel.bijection = true;
        else if (name == "hcf")
            sel.hcf = true;
        else
            throw ParseFailure("unknown check '" + name + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return sel;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("HOOKTAB_JOBS")) {
        try {
            auto v = parse_uint_list(env, "HOOKTAB_JOBS");
            if (v.size() == 1) return v[0];
        } catch (const ParseFailure&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::string multiset_stats(const NatMultiset& m) {
    std::string out;
    for (const auto& [v, mult] : m.counts()) {
        if (!out.empty()) out += ", ";
        out += std::to_string(v) + " x" + std::to_string(mult);
    }
    return out;
}

json check_to_json(const char* name, const VerifyReport& rep) {
    json j;
    j["name"] = name;
    j["passed"] = rep.passed;
    j["subject"] = rep.subject;
    j["details"] = rep.details;
    return j;
}

int cmd_render(const std::string& pstr, const std::string& fstr, const std::string& which,
               const std::string& addbox_str, const std::string& format) {
    Partition lambda = parse_partition(pstr);
    Frame frame = parse_frame(fstr);
    if (which == "hook-hook" && addbox_str.empty())
        throw ParseFailure("--which hook-hook requires --addbox");
    if (which != "hook-hook" && !addbox_str.empty())
        throw ParseFailure("--addbox only applies to --which hook-hook");

    RectTableau t = which == "hook-distance"  ? hook_distance_tableau(lambda, frame)
                    : which == "distance-hook" ? distance_hook_tableau(lambda, frame)
                                               : hook_hook_tableau(lambda, frame, parse_box(addbox_str));
    if (format == "ascii")
        std::cout << render_ascii(t);
    else if (format == "latex")
        std::cout << render_latex(t);
    else
        std::cout << render_json(t, which).dump(2) << '\n';
    return 0;
}

int cmd_verify_single(const Partition& lambda, const Frame& frame, const CheckSelection& checks,
                      const std::string& format) {
    if (!fits(lambda, frame))
        throw std::invalid_argument("partition does not fit frame");
    std::vector<std::pair<const char*, VerifyReport>> reports;
    if (checks.theorem) reports.emplace_back("theorem", verify_theorem(lambda, frame));
    if (checks.lemma2)
        for (Box b : addable_boxes(lambda, frame))
            reports.emplace_back("lemma2", verify_lemma2(lambda, frame, b));
    if (checks.inductive)
        for (Box b : addable_boxes(lambda, frame))
            reports.emplace_back("inductive", verify_inductive_step(lambda, frame, b));
    if (checks.bijection) reports.emplace_back("bijection", verify_bijection(lambda, frame));
    if (checks.hcf) reports.emplace_back("hcf", verify_hcf_identity(lambda, frame));

    bool all_passed = true;
    for (const auto& [name, rep] : reports) all_passed = all_passed && rep.passed;

    if (format == "json") {
        json j;
        j["frame"] = {{"r", frame.r}, {"c", frame.c}};
        j["partition"] = lambda.parts();
        json arr = json::array();
        for (const auto& [name, rep] : reports) arr.push_back(check_to_json(name, rep));
        j["checks"] = std::move(arr);
        j["passed"] = all_passed;
        if (checks.theorem && all_passed) {
            NatMultiset shared = entry_multiset(hook_distance_tableau(lambda, frame));
            json ms = json::object();
            for (const auto& [v, mult] : shared.counts()) ms[std::to_string(v)] = mult;
            j["shared_multiset"] = std::move(ms);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& [name, rep] : reports) {
            std::cout << rep.subject << ": " << (rep.passed ? "PASS" : "FAIL") << '\n';
            if (!rep.passed) std::cout << "  " << rep.details << '\n';
        }
        if (checks.theorem && all_passed) {
            NatMultiset shared = entry_multiset(hook_distance_tableau(lambda, frame));
            std::cout << "shared multiset: " << multiset_stats(shared) << '\n';
        }
        std::cout << (all_passed ? "PASS" : "FAIL") << '\n';
    }
    return all_passed ? 0 : kExitVerifyFailure;
}

int cmd_verify_all(const Frame& frame, const CheckSelection& checks, unsigned jobs, bool force,
                   const std::string& format) {
    FrameReport rep = verify_frame(frame, checks, jobs, force);
    if (format == "json") {
        json j;
        j["frame"] = {{"r", frame.r}, {"c", frame.c}};
        j["all"] = true;
        j["partitions"] = rep.partitions;
        j["checks_run"] = rep.checks_run;
        j["checks_passed"] = rep.checks_passed;
        j["passed"] = rep.all_passed;
        if (rep.first_failure) {
            json f;
            f["subject"] = rep.first_failure->subject;
            f["details"] = rep.first_failure->details;
            j["first_failure"] = std::move(f);
        } else {
            j["first_failure"] = nullptr;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "swept " << rep.partitions << " partitions in frame " << frame.r << 'x'
                  << frame.c << ": " << rep.checks_passed << '/' << rep.checks_run
                  << " checks passed\n";
        if (rep.first_failure) {
            std::cout << "first failure: " << rep.first_failure->subject << '\n'
                      << "  " << rep.first_failure->details << '\n';
        }
        std::cout << (rep.all_passed ? "PASS" : "FAIL") << '\n';
    }
    return rep.all_passed ? 0 : kExitVerifyFailure;
}

int cmd_schur(const std::string& pstr, unsigned r, const std::string& method,
              const std::string& format) {
    Partition lambda = parse_partition(pstr);
    if (method == "enum" || method == "hcf") {
        QPoly p = method == "enum" ? schur_by_enumeration(lambda, r) : schur_hcf(lambda, r);
        if (format == "json") {
            json j;
            j["partition"] = lambda.parts();
            j["r"] = r;
            j["method"] = method;
            j["polynomial"] = p.to_string();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << p.to_string() << '\n';
        }
        return 0;
    }
    QPoly pe = schur_by_enumeration(lambda, r);
    QPoly ph = schur_hcf(lambda, r);
    bool match = pe == ph;
    if (format == "json") {
        json j;
        j["partition"] = lambda.parts();
        j["r"] = r;
        j["method"] = "both";
        j["enum"] = pe.to_string();
        j["hcf"] = ph.to_string();
        j["match"] = match;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "enum: " << pe.to_string() << '\n';
        std::cout << "hcf: " << ph.to_string() << '\n';
        std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match ? 0 : kExitVerifyFailure;
}

int cmd_complement(const std::string& pstr, const std::string& fstr) {
    Partition lambda = parse_partition(pstr);
    Frame frame = parse_frame(fstr);
    std::cout << complement(lambda, frame).to_string() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hook/distance tableau toolkit"};
    app.require_subcommand(1);

    std::string pstr, fstr, which = "hook-distance", addbox, format = "ascii";
    std::string checks_str = "theorem", method = "hcf";
    unsigned r = 1;
    unsigned jobs = default_jobs();
    bool all = false, force = false;

    CLI::App* render = app.add_subcommand("render", "print a tableau");
    render->add_option("-p,--partition", pstr, "comma-separated parts, empty for the empty partition")
        ->required();
    render->add_option("-f,--frame", fstr, "frame as RxC")->required();
    render->add_option("--which", which, "hook-distance | distance-hook | hook-hook")
        ->check(CLI::IsMember({"hook-distance", "distance-hook", "hook-hook"}));
    render->add_option("--addbox", addbox, "added box i,j (hook-hook only)");
    render->add_option("--format", format, "ascii | latex | json")
        ->check(CLI::IsMember({"ascii", "latex", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run verification checks");
    auto* vp = verify->add_option("-p,--partition", pstr, "partition to check");
    auto* va = verify->add_flag("--all", all, "sweep every partition in the frame");
    verify->add_option("-f,--frame", fstr, "frame as RxC")->required();
    verify->add_option("--checks", checks_str,
                       "comma list of theorem,lemma2,inductive,bijection,hcf");
    verify->add_option("--jobs", jobs, "worker threads for --all")->check(CLI::Range(1u, 1024u));
    verify->add_flag("--force", force, "allow frames beyond the default sweep caps");
    verify->add_option("--format", format, "ascii | json")
        ->check(CLI::IsMember({"ascii", "json"}));
    vp->excludes(va);
    va->excludes(vp);

    CLI::App* schur = app.add_subcommand("schur", "principal specialization of a Schur polynomial");
    schur->add_option("-p,--partition", pstr, "partition")->required();
    schur->add_option("-r,--rank", r, "number of variables")->required()->check(CLI::Range(1u, 64u));
    schur->add_option("--method", method, "enum | hcf | both")
        ->check(CLI::IsMember({"enum", "hcf", "both"}));
    schur->add_option("--format", format, "ascii | json")->check(CLI::IsMember({"ascii", "json"}));

    CLI::App* comp = app.add_subcommand("complement", "complement of a partition in a frame");
    comp->add_option("-p,--partition", pstr, "partition")->required();
    comp->add_option("-f,--frame", fstr, "frame as RxC")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    try {
        if (render->parsed())
            return cmd_render(pstr, fstr, which, addbox, format);
        if (verify->parsed()) {
            if (!all && pstr.empty() && vp->count() == 0)
                throw ParseFailure("verify needs -p or --all");
            CheckSelection sel = parse_checks(checks_str);
            Frame frame = parse_frame(fstr);
            if (all) return cmd_verify_all(frame, sel, jobs, force, format);
            return cmd_verify_single(parse_partition(pstr), frame, sel, format);
        }
        if (schur->parsed())
            return cmd_schur(pstr, r, method, format);
        if (comp->parsed())
            return cmd_complement(pstr, fstr);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return 0;
}
