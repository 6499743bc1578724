#include "crossfam/verify.hpp"

#include <sstream>

#include "crossfam/colorings.hpp"
#include "crossfam/errors.hpp"
#include "crossfam/flowers.hpp"
#include "crossfam/generators.hpp"
#include "crossfam/predicates.hpp"
#include "crossfam/sampling.hpp"

namespace crossfam {

namespace {

struct SuiteRun {
    VerifyResult result;

    explicit SuiteRun(std::string suite) { result.suite = std::move(suite); }

    void fail(int trial, const std::string& what) {
        ++result.failures;
        std::ostringstream msg;
        msg << result.suite << " trial " << trial << ": " << what;
        result.messages.push_back(msg.str());
    }

    template <typename F>
    void trial(int i, F&& body) {
        ++result.trials;
        try {
            body();
        } catch (const std::exception& e) {
            fail(i, std::string("exception: ") + e.what());
        }
    }
};

} // namespace

VerifyResult verify_prop1(const VerifyOptions& opts) {
    SuiteRun run("prop1");
    for (int i = 0; i < opts.trials; ++i) {
        run.trial(i, [&] {
            Family f = random_cross_sperner_family(opts.seed + static_cast<std::uint64_t>(i));
            Coloring c = proposition_four_coloring(f);
            if (!is_proper_coloring(f, c)) run.fail(i, "coloring is not proper");
            if (c.color_count > 4) run.fail(i, "coloring uses more than 4 colors");
        });
    }
    return run.result;
}

VerifyResult verify_thm1(const VerifyOptions& opts) {
    SuiteRun run("thm1");
    for (int i = 0; i < opts.trials; ++i) {
        run.trial(i, [&] {
            Family f = random_cross_sperner_min3_family(opts.seed + static_cast<std::uint64_t>(i));
            Coloring c = theorem_three_coloring(f);
            if (!is_proper_coloring(f, c)) run.fail(i, "coloring is not proper");
            if (c.color_count > 3) run.fail(i, "coloring uses more than 3 colors");
            ChiCertificate cert = chi(f, opts.solve);
            if (cert.value > 3) run.fail(i, "exact chi exceeds 3");
            CrossColoringResult dispatched = color_cross_family(f, opts.solve);
            if (dispatched.verdict != CrossColoringVerdict::ChiLe3)
                run.fail(i, "dispatcher verdict is not chi_le_3");
        });
    }
    return run.result;
}

VerifyResult verify_thm2(const VerifyOptions& opts) {
    SuiteRun run("thm2");
    std::uint64_t cap = saturating_pow(static_cast<std::uint64_t>(opts.n),
                                       static_cast<std::uint64_t>(opts.n));
    for (int i = 0; i < opts.trials; ++i) {
        run.trial(i, [&] {
            Family f =
                random_critical_family(opts.seed + static_cast<std::uint64_t>(i), opts.n);
            if (!is_critical(f)) {
                run.fail(i, "sampler returned a non-critical family");
                return;
            }
            std::uint64_t largest = std::max(f.side_a.size(), f.side_b.size());
            if (largest > cap) run.fail(i, "side larger than n^n for the suite's n");
            Theorem2Report rep = check_theorem2(f, opts.solve);
            if (!rep.critical || !rep.bound_holds || !rep.margin)
                run.fail(i, "edge-bound report disagrees");
        });
    }
    return run.result;
}

VerifyResult verify_thm3(const VerifyOptions& opts) {
    SuiteRun run("thm3");
    run.trial(0, [&] {
        Family two = gen_simple_based(gen_disjoint_copies(gen_fano(), 2), 4, opts.solve);
        if (q_set(two) != std::set<int>{0, 1, 2, 3})
            run.fail(0, "two-copy base: intersection sizes differ from {0,1,2,3}");
        if (chi(two, opts.solve).value != 3) run.fail(0, "two-copy base: chi is not 3");
    });
    run.trial(1, [&] {
        Family one = gen_simple_based(gen_fano(), 4, opts.solve);
        if (q_set(one) != std::set<int>{1, 2, 3})
            run.fail(1, "single base: intersection sizes differ from {1,2,3}");
        if (chi(one, opts.solve).value != 3) run.fail(1, "single base: chi is not 3");
    });
    return run.result;
}

VerifyResult verify_lemma_flower(const VerifyOptions& opts) {
    SuiteRun run("lemma-flower");
    std::size_t count = static_cast<std::size_t>(
        saturating_pow(static_cast<std::uint64_t>(opts.k - 1),
                       static_cast<std::uint64_t>(opts.n)) + 1);
    for (int i = 0; i < opts.trials; ++i) {
        run.trial(i, [&] {
            std::vector<Edge> edges =
                random_edge_set(opts.seed + static_cast<std::uint64_t>(i), opts.n, count);
            auto flower = find_flower(edges, opts.k, opts.solve);
            if (!flower) {
                run.fail(i, "no flower found despite the pigeonhole guarantee");
                return;
            }
            if (flower->petals != opts.k) run.fail(i, "certificate petal count differs");
            // Independent re-check: fresh tau run on the full restriction.
            TauCertificate recheck = tau(restrict_edges(edges, flower->core), opts.solve);
            if (!recheck.at_least(opts.k))
                run.fail(i, "restricted covering number is below the petal count");
        });
    }
    return run.result;
}

} // namespace crossfam
