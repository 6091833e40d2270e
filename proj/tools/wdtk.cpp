// wdtk -- command line surface for the Whitehead doubling toolkit.
//
// One verb per library operation. Exit codes: 0 success, 1 domain error
// (printed as "<Kind>: message"), 2 usage error. All output is
// deterministic: identical invocations produce identical bytes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wdtk/alexander.hpp"
#include "wdtk/corpus.hpp"
#include "wdtk/json_io.hpp"
#include "wdtk/layers.hpp"
#include "wdtk/manifold.hpp"
#include "wdtk/satellite.hpp"

using namespace wdtk;

namespace {

std::string read_stream_or_file(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (std::filesystem::exists(arg))
        return read_file(arg);
    return arg;  // inline payload
}

struct DiagramInput {
    std::string pd;     // inline string, file path, or "-"
    std::string knot;   // corpus name
    std::string corpus = "corpus";

    void attach(CLI::App* cmd, bool required = true) {
        auto* a = cmd->add_option("--pd", pd, "PD code: inline string, file path, or - for stdin");
        auto* b = cmd->add_option("--knot", knot, "corpus knot name (e.g. 3_1)");
        cmd->add_option("--corpus", corpus, "corpus directory")->capture_default_str();
        a->excludes(b);
        if (required) {
            // CLI11 has no xor-require across options; enforced in resolve()
        }
    }

    Diagram resolve() const {
        if (!knot.empty())
            return load_corpus_entry(corpus, knot).diagram;
        require(!pd.empty(), "EmptyInput", "provide --pd or --knot");
        return parse_pd(read_stream_or_file(pd));
    }

    CompanionMeta resolve_meta() const {
        require(!knot.empty(), "InconsistentMeta",
                "companion metadata requires --knot (or explicit --tunnel/--hyperbolic flags)");
        return load_corpus_entry(corpus, knot).meta;
    }
};

void emit(const json& j, const std::string& text, const std::string& out_mode) {
    if (out_mode == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

void print_warnings(const WarningLog& wl) {
    for (const auto& [kind, msg] : wl.entries)
        std::cerr << "warning: " << kind << ": " << msg << "\n";
}

std::string presentation_text(const GroupPresentation& p) {
    std::ostringstream os;
    os << p.str() << "\n";
    for (size_t i = 0; i < p.peripheral.size(); ++i) {
        os << "peripheral " << i << ": meridian = " << p.word_str(p.peripheral[i].meridian)
           << ", longitude = " << p.word_str(p.peripheral[i].longitude) << "\n";
    }
    Abelianization ab = abelianization(p);
    os << "abelianization: free rank " << ab.free_rank << ", torsion [";
    for (size_t i = 0; i < ab.torsion.size(); ++i)
        os << (i ? "," : "") << ab.torsion[i].str();
    os << "]\n";
    return os.str();
}

json presentation_payload(const GroupPresentation& p) {
    json j = presentation_to_json(p);
    j["abelianization"] = abelianization_to_json(abelianization(p));
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wdtk: exact-arithmetic toolkit for Whitehead doubles, knot group "
                 "presentations, Alexander polynomials and rank certificates"};
    app.require_subcommand(1);
    std::string out_mode = "text";
    app.add_option("--out", out_mode, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // ---- parse ----
    DiagramInput in_parse;
    auto* cmd_parse = app.add_subcommand("parse", "validate a PD code and echo its canonical form");
    in_parse.attach(cmd_parse);

    // ---- double ----
    DiagramInput in_double;
    long tau = 0;
    int clasp = 1;
    auto* cmd_double = app.add_subcommand("double", "tau-twisted Whitehead double");
    in_double.attach(cmd_double);
    cmd_double->add_option("--tau", tau, "twisting number")->required();
    cmd_double->add_option("--clasp", clasp, "clasp sign (+1 or -1)")->capture_default_str();

    // ---- twist-knot ----
    long twist_j = 0;
    int clasp_tw = 1;
    auto* cmd_twist = app.add_subcommand("twist-knot", "twist knot TW_j (j full twists + clasp)");
    cmd_twist->add_option("--j", twist_j, "full twist count")->required();
    cmd_twist->add_option("--clasp", clasp_tw, "clasp sign")->capture_default_str();

    // ---- iterate ----
    DiagramInput in_iter;
    std::vector<long> taus;
    int clasp_it = 1;
    auto* cmd_iter = app.add_subcommand("iterate", "iterated Whitehead double");
    in_iter.attach(cmd_iter);
    cmd_iter->add_option("--taus", taus, "twisting numbers, innermost level first")
        ->required()
        ->delimiter(',');
    cmd_iter->add_option("--clasp", clasp_it, "clasp sign")->capture_default_str();

    // ---- k-family ----
    DiagramInput in_fam;
    long fam_m = 0, fam_l = 1;
    auto* cmd_fam = app.add_subcommand("k-family", "K_l = WD_tau(K_{l-1}) # K family diagram");
    in_fam.attach(cmd_fam);
    cmd_fam->add_option("--m", fam_m, "even half-twist count")->required();
    cmd_fam->add_option("--l", fam_l, "family index (>= 1)")->required();

    // ---- unclasp ----
    std::string unclasp_in;
    auto* cmd_unclasp = app.add_subcommand(
        "unclasp", "resolve the clasp of a double into the 2-component ribbon boundary");
    cmd_unclasp
        ->add_option("--in", unclasp_in,
                     "JSON with pd + provenance as emitted by double/twist-knot/iterate "
                     "(file or - for stdin)")
        ->required();

    // ---- alexander ----
    DiagramInput in_alex;
    auto* cmd_alex = app.add_subcommand("alexander", "Alexander polynomial of a knot diagram");
    in_alex.attach(cmd_alex);

    // ---- wirtinger ----
    DiagramInput in_wirt;
    auto* cmd_wirt = app.add_subcommand("wirtinger", "Wirtinger presentation with peripheral words");
    in_wirt.attach(cmd_wirt);

    // ---- tietze ----
    DiagramInput in_tz;
    std::string tz_in;
    long tz_budget = 100000;
    auto* cmd_tz = app.add_subcommand("tietze", "greedy Tietze simplification");
    in_tz.attach(cmd_tz, false);
    cmd_tz->add_option("--in", tz_in, "presentation JSON (file or -)");
    cmd_tz->add_option("--budget", tz_budget, "step budget")->capture_default_str();

    // ---- amalgamate ----
    std::string am_in1, am_in2, am_glue;
    auto* cmd_am = app.add_subcommand("amalgamate", "amalgamated product along glued words");
    cmd_am->add_option("--in1", am_in1, "first presentation JSON (file or inline)")->required();
    cmd_am->add_option("--in2", am_in2, "second presentation JSON")->required();
    cmd_am->add_option("--glue", am_glue,
                       "gluing pairs JSON: [{\"u\": [signed indices in in1], \"v\": [... in in2]}]");

    // ---- layer-quotient ----
    DiagramInput in_lq;
    long lq_m = 0, lq_l = 1, lq_budget = 200000;
    auto* cmd_lq = app.add_subcommand(
        "layer-quotient", "knot group of K_l assembled from layer groups and collapsed");
    in_lq.attach(cmd_lq);
    cmd_lq->add_option("--m", lq_m, "even half-twist count")->required();
    cmd_lq->add_option("--l", lq_l, "layer count (>= 1)")->required();
    cmd_lq->add_option("--budget", lq_budget, "Tietze budget")->capture_default_str();

    // ---- certify-rank ----
    DiagramInput in_cert;
    long cert_n = 1;
    std::optional<long> cert_tunnel, cert_jsj;
    std::optional<bool> cert_hyp;
    auto* cmd_cert = app.add_subcommand("certify-rank", "rank/tunnel certificate for WD^n(K)");
    in_cert.attach(cmd_cert, false);
    cmd_cert->add_option("--n", cert_n, "doubling depth (>= 1)")->required();
    cmd_cert->add_option("--tunnel", cert_tunnel, "declared tunnel number of K");
    cmd_cert->add_option("--hyperbolic", cert_hyp, "declared hyperbolicity of K");
    cmd_cert->add_option("--jsj-hyperbolic-pieces", cert_jsj,
                         "declared hyperbolic JSJ piece count of the exterior of K");

    // ---- ratio-table ----
    DiagramInput in_ratio;
    long ratio_nmax = 10;
    std::optional<long> ratio_tunnel;
    auto* cmd_ratio = app.add_subcommand("ratio-table", "convergence table for r(WD^n(K))/(n+1)");
    in_ratio.attach(cmd_ratio, false);
    cmd_ratio->add_option("--n-max", ratio_nmax, "largest n")->capture_default_str();
    cmd_ratio->add_option("--tunnel", ratio_tunnel, "declared tunnel number of K");

    // ---- build-w ----
    DiagramInput in_bw;
    long bw_m = 0;
    std::string bw_prefix, bw_tail = "L";
    auto* cmd_bw = app.add_subcommand("build-w", "manifold spec W(K, m) with a layer word");
    in_bw.attach(cmd_bw);
    cmd_bw->add_option("--m", bw_m, "even half-twist count")->required();
    cmd_bw->add_option("--word-prefix", bw_prefix, "layer word prefix, comma separated L/L*");
    cmd_bw->add_option("--word-tail", bw_tail, "repeating tail, comma separated L/L*")
        ->capture_default_str();

    // ---- classify ----
    DiagramInput in_cla, in_clb;
    long cl_ma = 0, cl_mb = 0;
    auto* cmd_cl = app.add_subcommand("classify", "compare W(K, m) and W(K', m') by invariants");
    cmd_cl->add_option("--pd-a", in_cla.pd, "first companion PD");
    cmd_cl->add_option("--knot-a", in_cla.knot, "first companion corpus name");
    cmd_cl->add_option("--pd-b", in_clb.pd, "second companion PD");
    cmd_cl->add_option("--knot-b", in_clb.knot, "second companion corpus name");
    cmd_cl->add_option("--corpus", in_cla.corpus, "corpus directory")->capture_default_str();
    cmd_cl->add_option("--m-a", cl_ma, "first m")->required();
    cmd_cl->add_option("--m-b", cl_mb, "second m")->required();

    // ---- nonembed-report ----
    DiagramInput in_ne;
    long ne_m = 0, ne_lmax = 2;
    auto* cmd_ne = app.add_subcommand("nonembed-report", "nonembeddability certificate for W(K, m)");
    in_ne.attach(cmd_ne);
    cmd_ne->add_option("--m", ne_m, "even half-twist count")->required();
    cmd_ne->add_option("--l-max", ne_lmax, "largest layer index (>= 2)")->required();

    // ---- corpus-list ----
    std::string corpus_dir = "corpus";
    auto* cmd_corpus = app.add_subcommand("corpus-list", "list bundled corpus knots");
    cmd_corpus->add_option("--corpus", corpus_dir, "corpus directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_parse) {
            Diagram d = in_parse.resolve();
            json j = diagram_to_json(d);
            std::ostringstream os;
            os << d.serialize() << "\n"
               << "crossings: " << d.crossing_count() << ", components: " << d.n_components()
               << "\n";
            if (d.n_components() == 1) {
                j["writhe"] = writhe(d);
                os << "writhe: " << writhe(d) << "\n";
            }
            emit(j, os.str(), out_mode);
        } else if (*cmd_double) {
            Diagram d = whitehead_double(in_double.resolve(), tau, clasp);
            std::ostringstream os;
            os << d.serialize() << "\n";
            emit(diagram_to_json(d), os.str(), out_mode);
        } else if (*cmd_twist) {
            Diagram d = twist_knot(twist_j, clasp_tw);
            emit(diagram_to_json(d), d.serialize() + "\n", out_mode);
        } else if (*cmd_iter) {
            WarningLog wl;
            auto res = iterated_double(in_iter.resolve(), taus, clasp_it, &wl);
            print_warnings(wl);
            emit(diagram_to_json(res.diagram), res.diagram.serialize() + "\n", out_mode);
        } else if (*cmd_fam) {
            auto res = k_family(in_fam.resolve(), fam_m, fam_l);
            json j = diagram_to_json(res.diagram);
            j["tau"] = res.tau;
            j["m"] = res.m;
            j["l"] = res.l;
            j["tau_formula"] = "tau = m/2 + writhe(K)";
            std::ostringstream os;
            os << res.diagram.serialize() << "\n"
               << "tau: " << res.tau << " (= " << res.m << "/2 + writhe)\n";
            emit(j, os.str(), out_mode);
        } else if (*cmd_unclasp) {
            json j = json::parse(read_stream_or_file(unclasp_in));
            require(j.contains("provenance"), "NoClaspMetadata",
                    "input JSON carries no doubling provenance");
            DoubleProvenance prov;
            prov.companion_pd = j["provenance"].at("companion_pd").get<std::string>();
            prov.tau = j["provenance"].at("tau").get<long>();
            prov.clasp_sign = j["provenance"].at("clasp_sign").get<int>();
            Diagram doubled = parse_pd(j.at("pd").get<std::string>()).with_provenance(prov);
            Diagram link = unclasp_link(doubled);
            json out = diagram_to_json(link);
            out["linking_number"] = linking_number(link, 0, 1);
            std::ostringstream os;
            os << link.serialize() << "\n"
               << "linking number: " << linking_number(link, 0, 1) << "\n";
            emit(out, os.str(), out_mode);
        } else if (*cmd_alex) {
            LaurentPoly delta = alexander_from_diagram(in_alex.resolve());
            json j;
            j["alexander"] = laurent_to_json(delta);
            j["pretty"] = delta.str();
            emit(j, delta.str() + "\n", out_mode);
        } else if (*cmd_wirt) {
            GroupPresentation p = wirtinger(in_wirt.resolve());
            emit(presentation_payload(p), presentation_text(p), out_mode);
        } else if (*cmd_tz) {
            GroupPresentation p;
            if (!tz_in.empty())
                p = presentation_from_json(json::parse(read_stream_or_file(tz_in)));
            else
                p = wirtinger(in_tz.resolve());
            TietzeResult res = tietze_simplify(p, tz_budget);
            json j = presentation_payload(res.presentation);
            j["steps_used"] = res.steps_used;
            j["budget_exhausted"] = res.budget_exhausted;
            std::ostringstream os;
            os << presentation_text(res.presentation) << "steps: " << res.steps_used
               << (res.budget_exhausted ? " (budget exhausted)\n" : "\n");
            emit(j, os.str(), out_mode);
        } else if (*cmd_am) {
            GroupPresentation p1 = presentation_from_json(json::parse(read_stream_or_file(am_in1)));
            GroupPresentation p2 = presentation_from_json(json::parse(read_stream_or_file(am_in2)));
            std::vector<std::pair<Word, Word>> glue;
            if (!am_glue.empty())
                for (const auto& g : json::parse(read_stream_or_file(am_glue)))
                    glue.push_back({g.at("u").get<Word>(), g.at("v").get<Word>()});
            GroupPresentation p = amalgamated_product(p1, p2, glue);
            emit(presentation_payload(p), presentation_text(p), out_mode);
        } else if (*cmd_lq) {
            auto res = layer_quotient(in_lq.resolve(), lq_m, lq_l, +1, lq_budget);
            json j = presentation_payload(res.presentation);
            j["tau"] = res.tau;
            j["m"] = res.m;
            j["l"] = res.l;
            j["tietze_steps"] = res.tietze_steps;
            std::ostringstream os;
            os << presentation_text(res.presentation) << "tau: " << res.tau << "\n";
            emit(j, os.str(), out_mode);
        } else if (*cmd_cert) {
            CompanionMeta meta;
            if (!in_cert.knot.empty())
                meta = in_cert.resolve_meta();
            if (cert_tunnel)
                meta.tunnel_number = cert_tunnel;
            if (cert_hyp)
                meta.is_hyperbolic = cert_hyp;
            if (cert_jsj)
                meta.jsj_hyperbolic_pieces = cert_jsj;
            LayerStructure ls = layer_structure(meta, cert_n);
            RankCertificate cert = rank_certificate(ls, meta);
            json j = certificate_to_json(cert);
            j["layer_structure"] = layer_structure_to_json(ls);
            std::ostringstream os;
            os << "rank lower bound: " << cert.lower << "\n";
            if (cert.upper)
                os << "rank upper bound: " << *cert.upper << "\n";
            if (cert.exact)
                os << "rank exact: " << *cert.exact << "\n";
            os << "tunnel number lower bound: " << cert.tunnel.lower << "\n";
            if (cert.tunnel.upper)
                os << "tunnel number upper bound: " << *cert.tunnel.upper << "\n";
            for (const auto& s : cert.provenance)
                os << "  - " << s << "\n";
            emit(j, os.str(), out_mode);
        } else if (*cmd_ratio) {
            CompanionMeta meta;
            if (!in_ratio.knot.empty())
                meta = in_ratio.resolve_meta();
            if (ratio_tunnel)
                meta.tunnel_number = ratio_tunnel;
            auto rows = ratio_table(meta, ratio_nmax);
            std::ostringstream os;
            os << "n\tlower\tupper\tlower/(n+1)\tupper/(n+1)\n";
            for (const auto& r : rows) {
                os << r.n << "\t" << r.lower << "\t";
                if (r.upper)
                    os << *r.upper;
                else
                    os << "-";
                os << "\t" << rational_str(r.lower_ratio) << "\t";
                if (r.upper_ratio)
                    os << rational_str(*r.upper_ratio);
                else
                    os << "-";
                os << "\n";
            }
            emit(ratio_table_to_json(rows), os.str(), out_mode);
        } else if (*cmd_bw) {
            auto parse_letters = [](const std::string& s) {
                std::vector<LayerLetter> v;
                std::stringstream ss(s);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    if (tok.empty())
                        continue;
                    require(tok == "L" || tok == "L*", "WordShapeMismatch",
                            "layer word letters must be L or L*");
                    v.push_back(tok == "L" ? LayerLetter::L : LayerLetter::Lstar);
                }
                return v;
            };
            WarningLog wl;
            ManifoldSpec spec =
                build_w(in_bw.resolve(), bw_m, {parse_letters(bw_prefix), parse_letters(bw_tail)},
                        &wl);
            print_warnings(wl);
            std::ostringstream os;
            os << "W(K, " << spec.m << "), tau = " << spec.tau
               << ", word = " << layer_word_str(spec.word) << "\n"
               << "Delta(K) = " << spec.companion_alexander.str() << "\n";
            emit(manifold_spec_to_json(spec), os.str(), out_mode);
        } else if (*cmd_cl) {
            in_clb.corpus = in_cla.corpus;
            ManifoldSpec a = build_w(in_cla.resolve(), cl_ma);
            ManifoldSpec b = build_w(in_clb.resolve(), cl_mb);
            ClassifyVerdict v = classify(a, b);
            json j;
            j["verdict"] = verdict_str(v);
            j["a"] = manifold_spec_to_json(a);
            j["b"] = manifold_spec_to_json(b);
            emit(j, verdict_str(v) + "\n", out_mode);
        } else if (*cmd_ne) {
            ManifoldSpec spec = build_w(in_ne.resolve(), ne_m);
            NonembedReport rep = nonembed_report(spec, ne_lmax);
            std::ostringstream os;
            os << "W(K, " << rep.m << "): tau = " << rep.tau << " = " << rep.m << "/2 + "
               << rep.writhe_k << " (audit " << (rep.tau_formula_ok ? "ok" : "FAILED") << ")\n";
            for (const auto& row : rep.rows)
                os << "  l = " << row.l << ": " << row.surjection
                   << ", rank >= " << row.rank_lower << "\n";
            for (const auto& [name, poly] : rep.witnesses)
                os << "  " << name << " = " << poly.str() << "\n";
            os << rep.contradiction << "\n" << rep.verdict << "\n";
            emit(nonembed_report_to_json(rep), os.str(), out_mode);
        } else if (*cmd_corpus) {
            json j = json::array();
            std::ostringstream os;
            for (const auto& name : corpus_names(corpus_dir)) {
                CorpusEntry e = load_corpus_entry(corpus_dir, name);
                json row;
                row["name"] = e.name;
                row["crossings"] = e.diagram.crossing_count();
                if (e.meta.tunnel_number)
                    row["tunnel_number"] = *e.meta.tunnel_number;
                if (e.meta.is_hyperbolic)
                    row["hyperbolic"] = *e.meta.is_hyperbolic;
                row["source"] = e.source;
                j.push_back(row);
                os << name << ": " << e.diagram.crossing_count() << " crossings";
                if (e.meta.tunnel_number)
                    os << ", t = " << *e.meta.tunnel_number;
                if (e.meta.is_hyperbolic)
                    os << (*e.meta.is_hyperbolic ? ", hyperbolic" : ", not hyperbolic");
                os << "\n";
            }
            emit(j, os.str(), out_mode);
        }
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
