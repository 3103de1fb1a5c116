// moncoh: cohomology of finite monoids from JSON inputs.
#include "moncoh/moncoh.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace moncoh;

namespace {

struct Job {
    std::string command;
    std::vector<std::string> monoids;
    std::string module;
    std::vector<size_t> subgroup, normal, section;
    size_t max_degree = 3;
    std::vector<std::string> pages = {"1", "2", "inf"};
    std::string suite = "all";
    uint64_t seed = 1;
    std::string out, format = "json";
    std::string fault;
};

struct Result {
    json report;
    std::vector<std::vector<std::string>> rows; // CSV, first row the header
    bool pass = true;
};

const SetupMonoid &need_one(const Job &j, std::vector<SetupMonoid> &ms) {
    if (ms.size() != 1)
        throw Error(ErrorKind::InvalidInput, "'" + j.command + "' needs exactly one --monoid");
    return ms[0];
}

GModule need_module(const Job &j, const FiniteMonoid &M) {
    if (j.module.empty())
        throw Error(ErrorKind::InvalidInput, "'" + j.command + "' needs --module");
    return module_from_json(read_json_file(j.module), M);
}

Result cmd_cohomology(const Job &j, std::vector<SetupMonoid> &ms) {
    const SetupMonoid &G = need_one(j, ms);
    GModule A = need_module(j, G.product());
    auto full = cohomology_groups(A, j.max_degree, Variant::Full);
    auto norm = cohomology_groups(A, j.max_degree, Variant::Normalised);
    Result r;
    json deg = json::array();
    r.rows.push_back({"n", "full", "normalised", "agree"});
    for (size_t n = 0; n <= j.max_degree; ++n) {
        bool ok = full[n] == norm[n];
        r.pass = r.pass && ok;
        deg.push_back({{"n", n}, {"full", canonical_json(full[n])}, {"normalised", canonical_json(norm[n])}, {"agree", ok}});
        r.rows.push_back({std::to_string(n), full[n].str(), norm[n].str(), ok ? "true" : "false"});
    }
    r.report = {{"command", "cohomology"}, {"monoid_size", G.size()}, {"degrees", deg}, {"pass", r.pass}};
    return r;
}

Result cmd_spectral(const Job &j, std::vector<SetupMonoid> &ms) {
    const SetupMonoid &G = need_one(j, ms);
    if (j.normal.empty())
        throw Error(ErrorKind::InvalidInput, "'spectral' needs --normal");
    GModule A = need_module(j, G.product());
    HSContext C = hs_context(G, A, subset_from_list(j.normal, G.product()), subset_from_list(j.section, G.product()));
    SpectralSequence ss(C.A, C.Q, j.max_degree, true);
    Result r;
    json pages = json::array();
    r.rows.push_back({"r", "p", "q", "entry"});
    for (auto &p : j.pages) {
        bool inf = p == "inf";
        size_t rr = 0;
        if (!inf) {
            try {
                rr = std::stoul(p);
            } catch (...) {
                throw Error(ErrorKind::InvalidInput, "bad page '" + p + "'");
            }
            if (rr < 1)
                throw Error(ErrorKind::InvalidInput, "pages start at 1");
        }
        SpectralPageForms pg = ss.page(inf ? j.max_degree + 2 : rr);
        pages.push_back(page_json(pg, inf));
        for (auto &e : pg.entries)
            r.rows.push_back({p, std::to_string(e.p), std::to_string(e.q), e.form.str()});
    }
    HSComparison cmp = hochschild_serre_comparison(C, j.max_degree, true);
    json checks = json::array();
    for (auto &it : cmp.items)
        checks.push_back({{"key", it.key}, {"p", it.p}, {"q", it.q}, {"pass", it.ok}, {"detail", it.detail}});
    r.pass = cmp.ok();
    r.report = {{"command", "spectral"}, {"quotient_size", C.Q.quotient.size()}, {"pages", pages},
                {"checks", checks}, {"pass", r.pass}};
    return r;
}

Result cmd_shapiro(const Job &j, std::vector<SetupMonoid> &ms) {
    const FiniteMonoid &G = need_one(j, ms).product();
    if (j.subgroup.empty())
        throw Error(ErrorKind::InvalidInput, "'shapiro' needs --subgroup");
    auto H = subset_from_list(j.subgroup, G);
    SubgroupMonoid S = subgroup_monoid(G, H);
    ShapiroContext C = shapiro_context(G, H, need_module(j, S.H));
    ShapiroIsoReport iso = shapiro_iso_report(C, j.max_degree);
    Result r;
    json deg = json::array();
    r.rows.push_back({"n", "induced", "subgroup", "agree"});
    for (size_t n = 0; n < iso.ind_side.size(); ++n) {
        bool ok = iso.ind_side[n] == iso.sub_side[n];
        deg.push_back({{"n", n}, {"induced", canonical_json(iso.ind_side[n])},
                       {"subgroup", canonical_json(iso.sub_side[n])}, {"agree", ok}});
        r.rows.push_back({std::to_string(n), iso.ind_side[n].str(), iso.sub_side[n].str(), ok ? "true" : "false"});
    }
    r.pass = iso.agree && iso.alpha_iso;
    r.report = {{"command", "shapiro"}, {"index", C.I.reps.index()}, {"degrees", deg},
                {"alpha_class_iso", iso.alpha_iso}, {"pass", r.pass}};
    return r;
}

Result cmd_double(const Job &j, std::vector<SetupMonoid> &ms) {
    if (ms.size() != 2)
        throw Error(ErrorKind::InvalidInput, "'double' needs --monoid D --monoid G");
    const FiniteMonoid &D = ms[0].product();
    ProductSetup P = product_setup(D, ms[1]);
    GModule A = need_module(j, P.M());
    DoubleComplex X = build_double(D, ms[1], A, j.max_degree);
    QuasiIsoReport q = quasi_iso_report(X);
    DoubleIdentityReport id = double_identity_report(X, 24, j.seed);
    ResidualReport res = residual_report(X, 100, j.seed);
    Result r;
    json deg = json::array();
    r.rows.push_back({"n", "product", "total", "agree"});
    for (size_t n = 0; n < q.product_side.size(); ++n) {
        bool ok = q.product_side[n] == q.total_side[n];
        deg.push_back({{"n", n}, {"product", canonical_json(q.product_side[n])},
                       {"total", canonical_json(q.total_side[n])}, {"agree", ok}});
        r.rows.push_back({std::to_string(n), q.product_side[n].str(), q.total_side[n].str(), ok ? "true" : "false"});
    }
    bool ids = id.delta_squared && id.partial_squared && id.commute && id.matrix_agrees && id.section_identity &&
               id.alpha_chain_map && id.extend_closed_form && id.extend_vanishes_on_D && id.extend_alpha;
    bool resid = res.residual_zero && res.pairs_cancel && res.sum_matches;
    r.pass = q.agree && q.alpha_iso && q.extension_preimages && ids && resid;
    r.report = {{"command", "double"},
                {"degrees", deg},
                {"alpha_class_iso", q.alpha_iso},
                {"pointwise_identities", ids},
                {"residual_cancellation", resid},
                {"pass", r.pass}};
    std::string w = !q.witness.empty() ? q.witness : !id.witness.empty() ? id.witness : res.witness;
    if (!r.pass && !w.empty())
        r.report["witness"] = w;
    return r;
}

Result cmd_torsor(const Job &j, std::vector<SetupMonoid> &ms) {
    const FiniteMonoid &G = need_one(j, ms).product();
    GModule A = need_module(j, G);
    if (!A.is_finite())
        throw Error(ErrorKind::InvalidInput, "torsor enumeration needs a finite module");
    TorsorClassReport tc = torsor_class_report(A);
    CohomologyData H(A, 1, Variant::Full);
    const Integer h1 = H.H[1].canonical().order();
    Result r;
    r.pass = Integer(tc.torsor_classes) == h1 && Integer(tc.cohomology_classes) == h1 && tc.well_defined && tc.injective;
    r.rows = {{"cocycles", "torsor_classes", "cohomology_classes", "H1_order"},
              {std::to_string(tc.cocycles), std::to_string(tc.torsor_classes), std::to_string(tc.cohomology_classes),
               h1.str()}};
    r.report = {{"command", "torsor"},
                {"cocycles", tc.cocycles},
                {"torsor_classes", tc.torsor_classes},
                {"cohomology_classes", tc.cohomology_classes},
                {"H1", canonical_json(H.H[1].canonical())},
                {"well_defined", tc.well_defined},
                {"injective", tc.injective},
                {"pass", r.pass}};
    return r;
}

Faults parse_fault(const std::string &s) {
    Faults f;
    if (s.empty())
        return f;
    auto c = s.find(':');
    if (c == std::string::npos)
        throw Error(ErrorKind::InvalidInput, "fault must be target:term");
    std::string t = s.substr(0, c);
    int term = 0;
    try {
        term = std::stoi(s.substr(c + 1));
    } catch (...) {
        throw Error(ErrorKind::InvalidInput, "bad fault term");
    }
    if (t == "kappa")
        f.kappa = term;
    else if (t == "shuffle")
        f.shuffle = term;
    else if (t == "hs-delta")
        f.hs_delta = term;
    else if (t == "dc-delta")
        f.dc_delta = term;
    else
        throw Error(ErrorKind::InvalidInput, "unknown fault target '" + t + "'");
    return f;
}

Result cmd_verify(const Job &j) {
    Bounds b;
    b.degree = j.max_degree;
    b.seed = j.seed;
    const auto &names = suite_names();
    if (j.suite != "all" && std::find(names.begin(), names.end(), j.suite) == names.end())
        throw Error(ErrorKind::InvalidInput, "unknown suite '" + j.suite + "'");
    SuiteReport s = run_suite(j.suite, b, parse_fault(j.fault));
    Result r;
    r.pass = s.ok();
    r.report = suite_json(s);
    r.report["command"] = "verify";
    r.report["suite"] = j.suite;
    r.report["seed"] = j.seed;
    r.rows.push_back({"suite", "key", "instance", "pass", "witness"});
    for (auto &i : s.items)
        r.rows.push_back({i.suite, i.key, i.instance, i.ok ? "true" : "false", i.witness});
    return r;
}

std::string render(const Result &r, const std::string &format) {
    if (format == "json")
        return r.report.dump(2) + "\n";
    std::ostringstream os;
    for (auto &row : r.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << csv_field(row[i]);
        os << "\n";
    }
    return os.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cohomology of finite monoids"};
    Job j;
    app.add_option("command", j.command, "cohomology | spectral | shapiro | double | torsor | verify")
        ->required()
        ->check(CLI::IsMember({"cohomology", "spectral", "shapiro", "double", "torsor", "verify"}));
    app.add_option("--monoid", j.monoids, "monoid JSON (double: D then G)")->check(CLI::ExistingFile);
    app.add_option("--module", j.module, "module JSON")->check(CLI::ExistingFile);
    app.add_option("--subgroup", j.subgroup, "element indices of H")->delimiter(',');
    app.add_option("--normal", j.normal, "element indices of the normal submonoid")->delimiter(',');
    app.add_option("--section", j.section, "one element index per coset")->delimiter(',');
    app.add_option("--max-degree", j.max_degree, "top degree")->check(CLI::Range(0, 8));
    app.add_option("--pages", j.pages, "pages to emit, e.g. 1,2,inf")->delimiter(',');
    app.add_option("--suite", j.suite, "coboundary | shapiro | shuffle | spectral | double | torsor | all");
    app.add_option("--seed", j.seed, "seed for sampled checks");
    app.add_option("--out", j.out, "report path (default stdout)");
    app.add_option("--format", j.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--inject-fault", j.fault)->group("");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    Result r;
    try {
        if (j.command == "verify") {
            r = cmd_verify(j);
        } else {
            std::vector<SetupMonoid> ms;
            for (auto &m : j.monoids)
                ms.push_back(setup_from_json(read_json_file(m)));
            if (j.command == "cohomology")
                r = cmd_cohomology(j, ms);
            else if (j.command == "spectral")
                r = cmd_spectral(j, ms);
            else if (j.command == "shapiro")
                r = cmd_shapiro(j, ms);
            else if (j.command == "double")
                r = cmd_double(j, ms);
            else
                r = cmd_torsor(j, ms);
        }
    } catch (const Error &e) {
        std::cerr << "moncoh: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "moncoh: internal error: " << e.what() << "\n";
        return 2;
    }
    const std::string text = render(r, j.format);
    if (j.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream o(j.out, std::ios::binary);
        if (!o) {
            std::cerr << "moncoh: cannot write '" << j.out << "'\n";
            return 2;
        }
        o << text;
    }
    if (!r.pass)
        std::cerr << "moncoh: verification failed\n";
    return r.pass ? 0 : 1;
}
