// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "moncoh/moncoh.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace moncoh;

namespace {

int failures = 0;

void line(int k, const std::string &what, bool ok, const std::string &witness, double secs) {
    std::printf("%s %2d  %-58s (%.1fs)\n", ok ? "PASS" : "FAIL", k, what.c_str(), secs);
    if (!ok) {
        ++failures;
        std::printf("        witness: %s\n", witness.empty() ? "(none)" : witness.c_str());
    }
}

// every item with one of the prefixes passes, and each prefix occurs
bool all_of(const SuiteReport &r, std::initializer_list<const char *> prefixes, std::string &w) {
    bool ok = true;
    for (auto p : prefixes) {
        if (!r.ok_prefix(p)) {
            ok = false;
            for (auto &i : r.items)
                if (i.key.rfind(p, 0) == 0 && !i.ok) {
                    w = i.key + " [" + i.instance + "]: " + i.witness;
                    break;
                }
            if (w.empty())
                w = std::string("no items for ") + p;
        }
    }
    return ok;
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    Bounds b;
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport cob = coboundary_suite(b);
    double tc = since(t0);
    std::string w;

    w.clear();
    line(1, "coboundary squares to zero on the test matrix", all_of(cob, {"coboundary.square_zero"}, w), w, tc);
    w.clear();
    line(2, "normalised and full cohomology agree, n <= 3", all_of(cob, {"coboundary.normalised_equals_full"}, w), w, tc);
    w.clear();
    line(3, "long exact sequences exact, connecting map where forced", all_of(cob, {"les.exact", "les.connecting_forced"}, w),
         w, tc);

    t0 = std::chrono::steady_clock::now();
    SuiteReport sh = shapiro_suite(b);
    w = sh.first_witness();
    line(4, "Shapiro chain maps, alpha beta = id, homotopy, iso", sh.ok() && sh.ok_prefix("shapiro.homotopy") &&
         sh.ok_prefix("shapiro.cohomology_iso"), w, since(t0));

    t0 = std::chrono::steady_clock::now();
    SuiteReport su = shuffle_suite(b);
    w.clear();
    line(5, "shuffle signs, pairing bijection, interchange identity",
         all_of(su, {"shuffle.sign_identity", "shuffle.pairing", "shuffle.interchange"}, w), w, since(t0));

    t0 = std::chrono::steady_clock::now();
    SuiteReport sp = spectral_suite(b);
    w.clear();
    line(6, "spectral sequence E1, E2, row 0, edge and convergence",
         all_of(sp, {"spectral.E1", "spectral.E2", "spectral.row0", "spectral.edge01", "spectral.order",
                     "spectral.graded", "spectral.differential", "filtration.respected"}, w),
         w, since(t0));

    t0 = std::chrono::steady_clock::now();
    SuiteReport dc = double_suite(b);
    double td = since(t0);
    w.clear();
    line(7, "total complex quasi-isomorphic, section identity, residuals",
         all_of(dc, {"double.quasi_iso", "double.alpha_class_iso", "double.section_identity",
                     "double.residual_cancellation", "double.delta_square_zero", "double.total_matrix",
                     "double.alpha_chain_map", "double.extension_closed_form"}, w),
         w, td);
    w.clear();
    line(8, "splitting for trivial D and the mapping fiber, r = 1, 2",
         all_of(dc, {"double.splitting", "double.tensor_map", "double.mapping_fiber"}, w), w, td);
    w.clear();
    line(9, "Shapiro over D x G for D = (Z/2,.)", all_of(dc, {"double.monoid_shapiro"}, w), w, td);

    t0 = std::chrono::steady_clock::now();
    SuiteReport to = torsor_suite(b);
    w = to.first_witness();
    line(10, "torsor and extension round trips, class counts", to.ok() && to.ok_prefix("torsor.class_count"), w,
         since(t0));

    w.clear();
    line(11, "dual-basis identity and non-cyclicity witness",
         all_of(cob, {"projectivity.linear", "projectivity.dual_basis", "projectivity.not_cyclic"}, w), w, tc);

    t0 = std::chrono::steady_clock::now();
    auto sweep = mutation_sweep(b);
    bool ok12 = !sweep.empty();
    w.clear();
    for (auto &m : sweep)
        if (!m.detected || m.witness.empty()) {
            ok12 = false;
            w = m.target + " term " + std::to_string(m.term) + " survived every suite";
        }
    line(12, "every single sign corruption is caught (" + std::to_string(sweep.size()) + " mutants)", ok12, w,
         since(t0));

    std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria pass");
    return failures ? 1 : 0;
}
