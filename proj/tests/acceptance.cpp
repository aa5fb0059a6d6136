// Acceptance gate: runs the default campaign and checks every release
// criterion at its pinned tolerance, printing one line per criterion.
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hermite2d/harness.hpp"

using h2d::harness::CampaignConfig;
using h2d::harness::CampaignResult;
using h2d::harness::SuiteResult;

namespace {

int failures = 0;

void report(bool ok, const std::string& label) {
    std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", label.c_str());
    if (!ok) ++failures;
}

const SuiteResult* find(const CampaignResult& r, const std::string& id) {
    for (const SuiteResult& s : r.suites)
        if (s.id == id) return &s;
    return nullptr;
}

bool suite_clean(const CampaignResult& r, const std::string& id) {
    const SuiteResult* s = find(r, id);
    return s != nullptr && !s->records.empty() && s->fails == 0 && s->not_converged == 0 &&
           s->skips == 0;
}

bool suites_clean(const CampaignResult& r, const std::vector<std::string>& ids) {
    for (const std::string& id : ids)
        if (!suite_clean(r, id)) return false;
    return true;
}

std::string describe(const CampaignResult& r, const std::string& id) {
    const SuiteResult* s = find(r, id);
    if (s == nullptr) return id + ": missing";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%s: %d checks, %d fail, tol %.1e (%s)", id.c_str(),
                  static_cast<int>(s->records.size()), s->fails, s->tolerance,
                  s->absolute_mode ? "abs" : "rel");
    return buf;
}

}  // namespace

int main() {
    CampaignConfig config = CampaignConfig::parse(h2d::harness::default_config_text());

    std::printf("running the default campaign single-threaded...\n");
    CampaignConfig single = config;
    single.jobs = 1;
    const CampaignResult run1 = h2d::harness::run_campaign(single);
    std::printf("%s", h2d::harness::summary_lines(run1).c_str());
    std::printf("campaign wall time: %.1f s\n\n", run1.wall_ms / 1000.0);

    // 1. real multilinear identity at 1e-7, N in {1,2,3}, 50 draws each,
    //    within its runtime budget
    {
        const SuiteResult* s = find(run1, "ks.real.identity");
        const bool ok = suite_clean(run1, "ks.real.identity") && s->records.size() == 150 &&
                        s->tolerance == 1e-7 && s->wall_ms <= 60000.0;
        report(ok, "criterion 1: real identity, 150 draws at rel 1e-7 within 60 s ("
                       + describe(run1, "ks.real.identity") + ")");
    }

    // 2. complex identity: 50 general draws per N at 1e-7 plus 20 Hermitian
    {
        const SuiteResult* g = find(run1, "ks.complex.identity");
        const SuiteResult* h = find(run1, "ks.complex.hermitian");
        const bool ok = suite_clean(run1, "ks.complex.identity") &&
                        suite_clean(run1, "ks.complex.hermitian") && g->records.size() == 150 &&
                        h->records.size() == 20 && g->tolerance == 1e-7 && h->tolerance == 1e-7;
        report(ok, "criterion 2: complex identity, general + Hermitian domains at rel 1e-7");
    }

    // 3. Laguerre route equals the 2D Hermite route at 1e-10 on the same corpus
    {
        const SuiteResult* s = find(run1, "ks.laguerre.equiv");
        const bool ok =
            suite_clean(run1, "ks.laguerre.equiv") && s->records.size() == 150 && s->tolerance == 1e-10;
        report(ok, "criterion 3: Laguerre form equivalence at rel 1e-10");
    }

    // 4. bilinear Charlier sum vs the resolved closed form at 1e-6, with the
    //    resolved form recorded in the report metadata
    {
        const SuiteResult* s = find(run1, "ks.charlier.bilinear");
        const bool documented = run1.metadata.count("charlier_bilinear_closed_form") > 0;
        const bool ok = suite_clean(run1, "ks.charlier.bilinear") && s->records.size() >= 10 &&
                        s->tolerance == 1e-6 && documented;
        report(ok, "criterion 4: Charlier bilinear identity at rel 1e-6, resolved form documented");
    }

    // 5. integral representations at 1e-8 absolute with quadrature
    //    self-consistency (point doubling is enforced inside every check)
    {
        const std::vector<std::string> ids = {"int.hermite.moment", "int.h2d.moment", "int.circle",
                                              "int.normal.real", "int.normal.complex"};
        bool ok = suites_clean(run1, ids);
        for (const std::string& id : ids) {
            const SuiteResult* s = find(run1, id);
            ok = ok && s->tolerance == 1e-8 && s->absolute_mode;
        }
        report(ok, "criterion 5: moment/circle/normal integral representations at abs 1e-8");
    }

    // 6. mixed relations at rel 1e-8 over the seeded grids
    {
        const SuiteResult* s = find(run1, "int.mixed");
        const bool ok = suite_clean(run1, "int.mixed") && s->tolerance == 1e-8 &&
                        !s->absolute_mode && s->records.size() >= 100;
        report(ok, "criterion 6: mixed Hermite/Laguerre relations at rel 1e-8");
    }

    // 7. factorial bound with zero violations; quadratic-form expansions at 1e-9
    {
        const SuiteResult* b = find(run1, "poly.h2d.bound");
        const bool ok = suite_clean(run1, "poly.h2d.bound") && b->records.size() == 200 &&
                        suites_clean(run1, {"ks.lemma.real", "ks.lemma.complex"}) &&
                        find(run1, "ks.lemma.real")->tolerance == 1e-9 &&
                        find(run1, "ks.lemma.complex")->tolerance == 1e-9;
        report(ok, "criterion 7: factorial bound (200 samples, zero violations) and "
                   "exponential expansions at 1e-9");
    }

    // 8. q-suite at its pinned tolerances with both normalization resolutions
    //    recorded in the metadata
    {
        bool ok = suites_clean(run1, {"q.gf", "q.awi", "q.moments", "q.bilinear", "q.multilinear"});
        ok = ok && find(run1, "q.gf")->tolerance == 1e-10;
        ok = ok && find(run1, "q.awi")->tolerance == 1e-8;
        ok = ok && find(run1, "q.bilinear")->tolerance == 1e-6;
        ok = ok && find(run1, "q.multilinear")->tolerance == 1e-5;
        ok = ok && run1.metadata.count("q_weight_moment_normalization") > 0 &&
             run1.metadata.count("q_bilinear_closed_form") > 0 &&
             run1.metadata.count("q_multilinear_closed_form") > 0;
        report(ok, "criterion 8: q-series generating functions, Askey-Wilson integral, and "
                   "resolved normalizations");
    }

    // 9. determinism across reruns and worker counts; single-threaded budget
    {
        CampaignConfig parallel = config;
        parallel.jobs = 0;  // library default worker count
        const CampaignResult run2 = h2d::harness::run_campaign(parallel);
        const bool identical =
            h2d::harness::to_json(run1, false) == h2d::harness::to_json(run2, false);
        const bool within_budget = run1.wall_ms <= 600000.0;
        report(identical && within_budget && run1.ok(true) && run2.ok(true),
               "criterion 9: byte-identical records across reruns/worker counts, full campaign "
               "within 10 minutes single-threaded");
    }

    std::printf("\n%s\n", failures == 0 ? "acceptance: all criteria PASS"
                                        : "acceptance: criteria FAILED");
    return failures == 0 ? 0 : 1;
}
