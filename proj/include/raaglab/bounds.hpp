#ifndef RAAGLAB_BOUNDS_HPP
#define RAAGLAB_BOUNDS_HPP

#include <map>
#include <string>
#include <vector>

#include "raaglab/errors.hpp"

namespace raaglab {

enum class CoeffKind { Constant, Split, General, AbelianH1 };
enum class GroupVariant { FullAut, CommutatorSubgroup };

struct BoundsQuery {
    long long n = 0;
    long long i = 0;
    CoeffKind coeff = CoeffKind::Constant;
    long long r = 0;  // coefficient degree (Split / General)
    long long N = 0;  // degree threshold
    GroupVariant variant = GroupVariant::FullAut;
    bool b_has_no_Z_factor = false;  // upgrade: replace n by n+1
    bool abelian_base = false;       // Aut(G^n), G f.g. abelian
};

struct RangeVerdict {
    bool surjective = false;
    bool injective = false;
    bool isomorphism = false;
    bool threshold_ok = false;  // n > N (full aut) / n > 2N (commutator)
    std::string applied_rule;
};

/// Evaluates the stability inequalities exactly (k*i <= n-a form; no
/// floating point). The no-Z upgrade substitutes n+1 for n; thresholds are
/// reported separately and do not zero the verdict.
RangeVerdict stability_range(const BoundsQuery& q);

struct TheoremRange {
    // i <= (n - surj_a) / surj_k etc.; exact rational comparisons
    long long surj_k, surj_a;
    long long inj_k, inj_a;
    long long iso_k, iso_a;
    bool surjective(long long n, long long i) const {
        return surj_k * i <= n - surj_a;
    }
    bool injective(long long n, long long i) const {
        return inj_k * i <= n - inj_a;
    }
    bool isomorphism(long long n, long long i) const {
        return iso_k * i <= n - iso_a;
    }
};

/// The headline theorems' closed-form ranges, keyed by
/// "constant", "constant-noZ", "commutator", "commutator-noZ",
/// "standard", "standard-noZ", "abelian-base".
std::map<std::string, TheoremRange> theorem_tables();

struct Discrepancy {
    std::string theorem;
    std::string aspect;  // "surjective" / "injective" / "isomorphism"
    long long n, i;
    bool table_value;
    bool general_value;
};

struct CrossCheckReport {
    std::vector<Discrepancy> discrepancies;
    std::string summary;
};

/// Instantiates the general theorem across the grid and diffs against
/// theorem_tables; known mismatches are reported, never reconciled.
CrossCheckReport cross_check(long long n_max, long long i_max);

} // namespace raaglab

#endif
