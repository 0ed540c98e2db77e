// Acceptance suite: runs every criterion at its stated tolerance (all
// checks are exact) and prints one verdict line per criterion.

#include <cstdio>

#include "bgbc/bgbc.hpp"

int main() {
    using namespace bgbc;

    struct Item {
        const char* label;
        CheckResult (*run)();
    };
    const Item items[] = {
        {"1. axiom-suite (vacuum/translation/product identities, 200 random pairs, d=2)",
         [] { return check_axiom_suite(); }},
        {"2. n2-closure (d=1,2,3; J_(1)J=d, untwisted L_(3)L=3d/2)",
         [] { return check_n2_closure(); }},
        {"3. generator-invariance (sl: d=2,3; sp: d=2,4; degrees -1..3)",
         [] { return check_generator_invariance(); }},
        {"4. invariant-theory-comparison (d=2, weight<=3, stabilization 3->4)",
         [] { return check_main_theorem(); }},
        {"5. g0t-invariants (d=2, sl2/sp2, weight<=3)", [] { return check_g0t_lemma(); }},
        {"6. leading-term (d=2, weight<=3)", [] { return check_leading_term(); }},
        {"7. linear-iso-homomorphism (100 random triples, d=2)",
         [] { return check_linear_iso(); }},
        {"8. finite-group-invariants ({+I,-I} in Sp2, weight<=2)",
         [] { return check_group_invariants(); }},
    };

    bool all = true;
    for (const Item& item : items) {
        CheckResult r = item.run();
        all = all && r.pass;
        std::printf("%s  %s  (%.1fs)\n", r.pass ? "PASS" : "FAIL", item.label,
                    r.wall_ms / 1000.0);
        std::fflush(stdout);
        if (!r.pass) std::fprintf(stderr, "details: %s\n", r.details.dump(2).c_str());
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return all ? 0 : 1;
}
