// Command-line surface: tap, fitting, novikov, cones, fibred, intersect.
// Exit codes: 0 ok, 1 degenerate-but-valid (zero invariant), 2 input error,
// 3 minor budget exceeded.

#include "tnov/cones.hpp"
#include "tnov/ingest.hpp"
#include "tnov/novikov.hpp"
#include "tnov/wada.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tnov;
using nlohmann::json;

struct JobConfig {
    std::string pres_file, pd_file, braid, complex_file;
    std::vector<std::string> rep_files;
    std::string ring_name;
    std::string xi_text;
    std::string mu_text;
    bool json_out = false;
    bool minimize_cones = false;
    int sweep = 0;
    uint64_t minor_budget = 1000000;
    int threads = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Job {
    Presentation pres;
    AbelianMap pi;
    std::optional<AbelianMap> meridian_one;  // for link inputs
    Representation rep;
    int components = 1;
};

CoefficientRing ring_from_name(const std::string& name) {
    if (name.empty() || name == "Z") return CoefficientRing::integers();
    if (name == "Q") return CoefficientRing::rationals();
    if (name.rfind("Zp:", 0) == 0)
        return CoefficientRing::prime_field(std::stoul(name.substr(3)));
    throw input_error("unknown ring '" + name + "' (use Z, Q, or Zp:<p>)");
}

Job load_job(const JobConfig& cfg, const std::string& rep_file) {
    int sources = (!cfg.pres_file.empty()) + (!cfg.pd_file.empty()) + (!cfg.braid.empty());
    if (sources != 1) throw input_error("exactly one of --pres, --pd, --braid is required");
    Job job;
    if (!cfg.pres_file.empty()) {
        job.pres = parse_presentation(read_file(cfg.pres_file));
        job.pi = abelianize(job.pres);
        if (job.pi.k == 1) job.meridian_one = job.pi;
    } else {
        LinkPresentation lp = !cfg.pd_file.empty() ? pd_to_wirtinger(parse_pd(read_file(cfg.pd_file)))
                                                   : braid_closure(cfg.braid);
        job.pres = lp.presentation;
        job.pi = abelianize(job.pres);
        job.components = lp.components;
        MeridianMap mm = meridian_map(lp);
        job.meridian_one = mm.one_variable;
    }
    CoefficientRing ring = ring_from_name(cfg.ring_name);
    if (!rep_file.empty()) {
        job.rep = parse_representation_json(read_file(rep_file), job.pres);
        if (!cfg.ring_name.empty() && !(job.rep.ring == ring)) {
            // ring override: reinterpret the entries
            Representation r2 = job.rep;
            r2.ring = ring;
            for (auto& m : r2.matrices)
                for (size_t i = 0; i < m.rows(); ++i)
                    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = ring.normalize(m.at(i, j));
            job.rep = r2;
        }
    } else {
        job.rep = Representation::trivial(ring, 1, job.pres.num_generators());
    }
    auto violation = validate(job.rep, job.pres);
    if (violation)
        throw input_error("representation invalid: " + violation->message);
    return job;
}

MinorBudget budget_of(const JobConfig& cfg) {
    MinorBudget b;
    b.max_minors = cfg.minor_budget;
    b.threads = cfg.threads;
    return b;
}

int run_tap(const JobConfig& cfg) {
    Job job = load_job(cfg, cfg.rep_files.empty() ? "" : cfg.rep_files[0]);
    SubstitutionMap subst(job.rep, job.pi, job.pres);
    TwistedAlexander ta = twisted_alexander(job.pres, subst, budget_of(cfg));
    if (cfg.json_out) {
        json j;
        j["regime"] = ta.k == 1 ? "one-variable" : "multi-variable";
        j["rank"] = ta.k;
        j["numerator"] = render(ta.value.num);
        j["denominator"] = render(ta.value.den);
        j["value"] = ta.value.to_string();
        j["suppressed-generator"] = job.pres.generators[ta.suppressed];
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ta.value.to_string() << "\n";
    }
    return ta.value.is_zero() ? 1 : 0;
}

json fitting_sequence_json(const FittingSequence& fs) {
    json j;
    j["degree"] = fs.degree;
    json window = json::array();
    for (const FittingEntry& e : fs.window) {
        json je;
        je["m"] = e.m;
        je["class"] = e.ideal.cls == IdealClass::zero
                          ? "zero"
                          : (e.ideal.cls == IdealClass::whole_ring ? "whole-ring" : "proper");
        je["gcd"] = render(e.ideal.gcd);
        window.push_back(je);
    }
    j["window"] = window;
    json reduced = json::array();
    for (const LaurentPoly& r : fs.reduced) reduced.push_back(render(r));
    j["reduced"] = reduced;
    j["A"] = fs.a_k;
    return j;
}

int run_fitting_complex(const JobConfig& cfg) {
    ChainComplex c = parse_complex_json(read_file(cfg.complex_file));
    MinorBudget budget = budget_of(cfg);
    json out;
    json seqs = json::array();
    for (int d = 0; d <= c.top_degree(); ++d)
        seqs.push_back(fitting_sequence_json(fitting_sequence(c, d, budget)));
    out["sequences"] = seqs;
    if (c.vars == 0 && c.ring.kind() == RingKind::integers) {
        HomologySummary h = homology_over_pid(c, budget);
        json hm;
        hm["betti"] = h.betti;
        hm["torsion-number"] = h.torsion_number;
        json orders = json::array();
        for (const auto& degree : h.torsion_orders) {
            json row = json::array();
            for (const mpz_class& v : degree) row.push_back(v.get_str());
            orders.push_back(row);
        }
        hm["torsion-orders"] = orders;
        out["homology"] = hm;
    }
    if (cfg.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& seq : out["sequences"]) {
            std::cout << "degree " << seq["degree"] << ": reduced GCDs";
            for (const auto& r : seq["reduced"]) std::cout << " " << r.get<std::string>();
            std::cout << "\n";
        }
        if (out.contains("homology")) {
            std::cout << "betti:";
            for (const auto& b : out["homology"]["betti"]) std::cout << " " << b;
            std::cout << "\ntorsion:";
            for (const auto& row : out["homology"]["torsion-orders"]) {
                std::cout << " [";
                bool first = true;
                for (const auto& v : row) {
                    std::cout << (first ? "" : " ") << v.get<std::string>();
                    first = false;
                }
                std::cout << "]";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_fitting(const JobConfig& cfg) {
    if (!cfg.complex_file.empty()) return run_fitting_complex(cfg);
    Job job = load_job(cfg, cfg.rep_files.empty() ? "" : cfg.rep_files[0]);
    SubstitutionMap subst(job.rep, job.pi, job.pres);
    ChainComplex front = twisted_front(job.pres, subst);
    FittingSequence fs = fitting_sequence(front, 1, budget_of(cfg));
    IdealValue a = fs.ideal_at(1);
    if (cfg.json_out) {
        json j;
        j["A"] = render(a.gcd);
        json window = json::array();
        for (const FittingEntry& e : fs.window) {
            json je;
            je["m"] = e.m;
            je["class"] = e.ideal.cls == IdealClass::zero
                              ? "zero"
                              : (e.ideal.cls == IdealClass::whole_ring ? "whole-ring" : "proper");
            je["gcd"] = render(e.ideal.gcd);
            window.push_back(je);
        }
        j["delta"] = window;
        j["A1"] = fs.a_k;
        json reduced = json::array();
        for (const LaurentPoly& r : fs.reduced) reduced.push_back(render(r));
        j["reduced"] = reduced;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "A = " << render(a.gcd) << "\n";
        for (const FittingEntry& e : fs.window) {
            std::cout << "delta_" << e.m << " = ";
            if (e.ideal.cls == IdealClass::zero)
                std::cout << "0 (zero ideal)";
            else if (e.ideal.cls == IdealClass::whole_ring)
                std::cout << "1 (unit GCD)";
            else
                std::cout << render(e.ideal.gcd);
            std::cout << "\n";
        }
    }
    return a.gcd.is_zero() ? 1 : 0;
}

int run_novikov_complex(const JobConfig& cfg) {
    ChainComplex c = parse_complex_json(read_file(cfg.complex_file));
    if (cfg.xi_text.empty()) throw input_error("novikov needs --xi");
    CohomologyClass xi = parse_xi(cfg.xi_text, static_cast<size_t>(c.vars));
    NovikovNumbers nums = novikov_numbers(c, xi, budget_of(cfg));
    auto bounds = morse_lower_bounds(nums);
    if (cfg.json_out) {
        json numbers;
        numbers["bhat"] = nums.bhat;
        numbers["qhat"] = nums.qhat;
        json tau = json::array();
        for (const auto& degree : nums.tau) {
            json row = json::array();
            for (const LaurentPoly& t : degree) row.push_back(render(t));
            tau.push_back(row);
        }
        numbers["tau"] = tau;
        json j;
        j["numbers"] = numbers;
        j["morse-lower-bounds"] = bounds;
        if (!nums.injective_xi) j["caveat"] = nums.caveat;
        std::cout << j.dump(2) << "\n";
    } else {
        for (size_t d = 0; d < nums.bhat.size(); ++d)
            std::cout << "degree " << d << ": bhat = " << nums.bhat[d]
                      << ", qhat = " << nums.qhat[d] << "\n";
        std::cout << "Morse lower bounds:";
        for (long b : bounds) std::cout << " " << b;
        std::cout << "\n";
    }
    return 0;
}

int run_novikov(const JobConfig& cfg) {
    if (!cfg.complex_file.empty()) return run_novikov_complex(cfg);
    Job job = load_job(cfg, cfg.rep_files.empty() ? "" : cfg.rep_files[0]);
    SubstitutionMap subst(job.rep, job.pi, job.pres);
    if (cfg.xi_text.empty()) throw input_error("novikov needs --xi");
    CohomologyClass xi = parse_xi(cfg.xi_text, static_cast<size_t>(job.pi.k));
    NovikovNumbers nums = novikov_numbers(job.pres, subst, xi, 1, budget_of(cfg));
    VanishingReport vr = vanishing_3mfd(job.pres, subst, xi, budget_of(cfg));
    auto bounds = morse_lower_bounds(nums);
    if (cfg.json_out) {
        json j;
        j["vanishes"] = vr.vanishes;
        j["monic"] = vr.monic;
        j["witness"] = render(vr.witness);
        j["note"] = vr.note;
        json numbers;
        numbers["bhat"] = nums.bhat;
        numbers["qhat"] = nums.qhat;
        json tau = json::array();
        for (const auto& degree : nums.tau) {
            json row = json::array();
            for (const LaurentPoly& t : degree) row.push_back(render(t));
            tau.push_back(row);
        }
        numbers["tau"] = tau;
        j["numbers"] = numbers;
        j["morse-lower-bounds"] = bounds;
        if (!nums.injective_xi) j["caveat"] = nums.caveat;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "A = " << render(vr.witness) << "\n";
        std::cout << "xi-monic: " << (vr.monic ? "yes" : "no") << "\n";
        std::cout << "twisted Novikov homology vanishes: " << (vr.vanishes ? "yes" : "no") << " ("
                  << vr.note << ")\n";
        for (size_t d = 0; d < nums.bhat.size(); ++d) {
            std::cout << "degree " << d << ": bhat = " << nums.bhat[d] << ", qhat = " << nums.qhat[d];
            if (!nums.tau[d].empty()) {
                std::cout << ", tau =";
                for (const LaurentPoly& t : nums.tau[d]) std::cout << " " << render(t);
            }
            std::cout << "\n";
        }
        std::cout << "Morse lower bounds:";
        for (long b : bounds) std::cout << " " << b;
        std::cout << "\n";
        if (!nums.injective_xi) std::cout << "caveat: " << nums.caveat << "\n";
    }
    return vr.witness.is_zero() ? 1 : 0;
}

int run_cones(const JobConfig& cfg) {
    Job job = load_job(cfg, cfg.rep_files.empty() ? "" : cfg.rep_files[0]);
    SubstitutionMap subst(job.rep, job.pi, job.pres);
    IdealValue a = twisted_fitting(job.pres, subst, 1, budget_of(cfg));
    ConeSystem sys = acyclicity_cones(a.gcd);
    if (cfg.minimize_cones) sys = minimize(sys);
    if (cfg.sweep > 0) {
        for (const std::string& row : sweep_table(sys, cfg.sweep)) std::cout << row << "\n";
        return 0;
    }
    if (cfg.json_out) {
        std::cout << cones_to_json(sys) << "\n";
    } else {
        std::cout << "A = " << render(a.gcd) << "\n";
        std::cout << "tag: " << tag_name(sys.tag) << "\n";
        for (const Cone& c : sys.cones) {
            std::cout << "cone at vertex (";
            for (size_t i = 0; i < c.vertex.size(); ++i)
                std::cout << (i ? "," : "") << c.vertex[i];
            std::cout << "):";
            for (const IneqVector& d : c.gt) {
                std::cout << " {";
                for (size_t i = 0; i < d.size(); ++i)
                    std::cout << (i ? "," : "") << d[i].get_str();
                std::cout << "}>0";
            }
            std::cout << "\n";
        }
        if (sys.tag == ConeTag::complement_of_hyperplanes) {
            std::cout << "walls:";
            for (const IneqVector& d : sys.walls) {
                std::cout << " {";
                for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i].get_str();
                std::cout << "}";
            }
            std::cout << "\n";
        }
    }
    return a.gcd.is_zero() ? 1 : 0;
}

int run_fibred(const JobConfig& cfg) {
    Job job = load_job(cfg, cfg.rep_files.empty() ? "" : cfg.rep_files[0]);
    AbelianMap meridian;
    if (job.meridian_one)
        meridian = *job.meridian_one;
    else
        meridian = sum_to_one_map(job.pi, job.pres);
    FibredReport fr = fibred_obstruction(job.pres, job.rep, meridian, budget_of(cfg));
    if (cfg.json_out) {
        json j;
        j["obstructed"] = fr.obstructed;
        j["invariant"] = render(fr.invariant);
        j["ends"] = json::array({fr.low_end, fr.high_end});
        j["detail"] = fr.detail;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "obstructed: " << (fr.obstructed ? "true" : "false") << "\n";
        std::cout << "invariant: " << render(fr.invariant) << "\n";
        std::cout << fr.detail << "\n";
    }
    return fr.invariant.is_zero() ? 1 : 0;
}

int run_intersect(const JobConfig& cfg) {
    Job base = load_job(cfg, cfg.rep_files.empty() ? "" : cfg.rep_files[0]);
    std::vector<ConeSystem> systems;
    if (cfg.rep_files.empty()) {
        SubstitutionMap subst(base.rep, base.pi, base.pres);
        systems.push_back(acyclicity_cones(twisted_fitting(base.pres, subst, 1, budget_of(cfg)).gcd));
    }
    for (const std::string& rf : cfg.rep_files) {
        Job job = load_job(cfg, rf);
        SubstitutionMap subst(job.rep, job.pi, job.pres);
        systems.push_back(acyclicity_cones(twisted_fitting(job.pres, subst, 1, budget_of(cfg)).gcd));
    }
    ConeSystem inter = intersect(systems);
    if (cfg.minimize_cones) inter = minimize(inter);
    if (cfg.json_out)
        std::cout << cones_to_json(inter) << "\n";
    else {
        std::cout << "tag: " << tag_name(inter.tag) << "\n";
        std::cout << "cones: " << inter.cones.size() << "\n";
        for (const Cone& c : inter.cones) {
            std::cout << "cone:";
            for (const IneqVector& d : c.gt) {
                std::cout << " {";
                for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? "," : "") << d[i].get_str();
                std::cout << "}>0";
            }
            std::cout << "\n";
        }
    }
    return inter.cones.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Alexander polynomials, Fitting invariants, Novikov numbers and "
                 "acyclicity cones for finitely presented groups"};
    app.set_version_flag("--version", "tnov 1.0.0");
    app.require_subcommand(1);

    JobConfig cfg;
    auto add_common = [&](CLI::App* sub, bool many_reps = false) {
        sub->add_option("--pres", cfg.pres_file, "presentation file");
        sub->add_option("--pd", cfg.pd_file, "planar-diagram file");
        sub->add_option("--braid", cfg.braid, "braid word, e.g. 's1 s1 s1'");
        if (many_reps)
            sub->add_option("--rep", cfg.rep_files, "representation JSON file (repeatable)");
        else
            sub->add_option("--rep", cfg.rep_files, "representation JSON file")->expected(0, 1);
        sub->add_option("--ring", cfg.ring_name, "coefficient ring: Z, Q, Zp:<p>");
        sub->add_flag("--json", cfg.json_out, "JSON output");
        sub->add_option("--minor-budget", cfg.minor_budget, "minor evaluation budget");
        sub->add_option("--threads", cfg.threads, "worker thread cap");
    };

    CLI::App* tap = app.add_subcommand("tap", "twisted Alexander polynomial");
    add_common(tap);
    CLI::App* fitting = app.add_subcommand("fitting", "twisted Fitting invariants");
    add_common(fitting);
    fitting->add_option("--complex", cfg.complex_file, "chain complex JSON file");
    CLI::App* novikov = app.add_subcommand("novikov", "twisted Novikov numbers and vanishing");
    add_common(novikov);
    novikov->add_option("--xi", cfg.xi_text, "cohomology class, e.g. 1 or 2,1,-3");
    novikov->add_option("--complex", cfg.complex_file, "chain complex JSON file");
    CLI::App* cones = app.add_subcommand("cones", "acyclicity cones");
    add_common(cones);
    cones->add_flag("--minimize", cfg.minimize_cones, "prune redundant inequalities");
    cones->add_option("--sweep", cfg.sweep, "emit a 2-D angle sweep table with N samples");
    CLI::App* fibred = app.add_subcommand("fibred", "fibredness obstruction");
    add_common(fibred);
    CLI::App* inter = app.add_subcommand("intersect", "intersect acyclicity cones over representations");
    add_common(inter, true);
    inter->add_flag("--minimize", cfg.minimize_cones, "prune redundant inequalities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (tap->parsed()) return run_tap(cfg);
        if (fitting->parsed()) return run_fitting(cfg);
        if (novikov->parsed()) return run_novikov(cfg);
        if (cones->parsed()) return run_cones(cfg);
        if (fibred->parsed()) return run_fibred(cfg);
        if (inter->parsed()) return run_intersect(cfg);
    } catch (const tnov::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tnov::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
