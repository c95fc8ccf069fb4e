#include "slocc2mn/nonlocal.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace slocc::nonlocal {

using counting::Partition;
using counting::partition_before;

ParamVector::ParamVector(std::vector<GaussianRational> vals, bool h) : values(std::move(vals)), extra_h(h) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i].is_zero() || values[i].is_one())
            throw DomainError("nonlocal parameter in {0, 1}: " + values[i].str());
        for (size_t k = i + 1; k < values.size(); ++k)
            if (values[i] == values[k]) throw DomainError("nonlocal parameters must be pairwise distinct");
    }
}

std::string ParamVector::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i].str();
    os << "]";
    return os.str();
}

ParamVector parse_param_vector(const std::string& text, bool extra_h) {
    size_t b = text.find('[');
    size_t e = text.rfind(']');
    if (b == std::string::npos || e == std::string::npos || e < b)
        throw ParseError("parameter vector must be bracketed: " + text);
    std::string inner = text.substr(b + 1, e - b - 1);
    std::vector<GaussianRational> vals;
    size_t pos = 0;
    while (pos < inner.size()) {
        size_t comma = inner.find(',', pos);
        std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.find_first_not_of(" \t") != std::string::npos) vals.push_back(parse_scalar(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return {std::move(vals), extra_h};
}

GaussianRational cross_ratio(const ProjectivePoint& a, const ProjectivePoint& b,
                             const ProjectivePoint& c, const ProjectivePoint& d) {
    auto det = [](const ProjectivePoint& x, const ProjectivePoint& y) {
        return x.mu * y.nu - x.nu * y.mu;
    };
    const ProjectivePoint* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int k = i + 1; k < 4; ++k)
            if (*pts[i] == *pts[k]) throw DegenerateConfiguration();
    GaussianRational num = det(a, c) * det(b, d);
    GaussianRational den = det(a, d) * det(b, c);
    return num / den;
}

std::pair<ParamVector, ILOTriple> reduce_to_normal_form(const std::vector<GaussianRational>& eigs, int n_dim) {
    const int m = static_cast<int>(eigs.size());
    if (m < 2) throw InvalidFamily("need at least two eigenvalues");
    if (m >= n_dim) throw InvalidFamily("m = N is outside the covered families; need m < N");
    for (int i = 0; i < m; ++i) {
        if (eigs[i].is_zero()) throw InvalidFamily("eigenvalues must be nonzero");
        for (int k = i + 1; k < m; ++k)
            if (eigs[i] == eigs[k]) throw InvalidFamily("eigenvalues must be pairwise distinct");
    }
    const GaussianRational& l1 = eigs[0];
    const GaussianRational& l2 = eigs[1];
    GaussianRational diff = l1 - l2;

    ExactMatrix t(2, 2);
    t.at(0, 0) = l2 / diff;
    t.at(0, 1) = -l2 / (l1 * diff);
    t.at(1, 0) = GaussianRational(0);
    t.at(1, 1) = l1.inverse();

    std::vector<GaussianRational> p_diag(n_dim, diff / l2);
    p_diag[0] = GaussianRational(1);
    for (int k = 1; k < m; ++k) p_diag[k] = l1 / eigs[k];
    ILOTriple op(std::move(t), ExactMatrix::diagonal(p_diag), ExactMatrix::identity(n_dim));

    std::vector<GaussianRational> params;
    params.reserve(m - 2);
    for (int k = 2; k < m; ++k) params.push_back((l1 - eigs[k]) / diff * (l2 / eigs[k]));
    return {ParamVector(std::move(params), n_dim == m + 1), std::move(op)};
}

ParamVector gen_swap(const ParamVector& v, int i) {
    if (i < 1 || i > static_cast<int>(v.values.size()) - 1)
        throw IndexOutOfRange("A_i index out of range: " + std::to_string(i));
    std::vector<GaussianRational> vals = v.values;
    std::swap(vals[i - 1], vals[i]);
    return {std::move(vals), v.extra_h};
}

ParamVector gen_f(const ParamVector& v) {
    if (v.values.empty()) return v; // the m = 2 family has no parameters
    std::vector<GaussianRational> vals = v.values;
    GaussianRational last_inv = vals.back().inverse();
    for (size_t k = 0; k + 1 < vals.size(); ++k) vals[k] *= last_inv;
    vals.back() = last_inv;
    return {std::move(vals), v.extra_h};
}

ParamVector gen_g(const ParamVector& v) {
    std::vector<GaussianRational> vals = v.values;
    for (auto& x : vals) x = GaussianRational(1) - x;
    return {std::move(vals), v.extra_h};
}

ParamVector gen_h(const ParamVector& v) {
    if (!v.extra_h) throw HNotApplicable();
    std::vector<GaussianRational> vals = v.values;
    for (auto& x : vals) x = x.inverse();
    return {std::move(vals), v.extra_h};
}

namespace {

bool vector_less(const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scalar_less);
}

} // namespace

std::vector<ParamVector> orbit(const ParamVector& v) {
    const int len = static_cast<int>(v.values.size());
    std::set<std::vector<GaussianRational>, bool (*)(const std::vector<GaussianRational>&,
                                                     const std::vector<GaussianRational>&)>
        seen(vector_less);
    std::deque<ParamVector> queue{v};
    seen.insert(v.values);
    while (!queue.empty()) {
        ParamVector cur = queue.front();
        queue.pop_front();
        std::vector<ParamVector> next;
        if (len > 0) {
            next.push_back(gen_f(cur));
            next.push_back(gen_g(cur));
            if (v.extra_h) next.push_back(gen_h(cur));
            for (int i = 1; i <= len - 1; ++i) next.push_back(gen_swap(cur, i));
        }
        for (auto& n : next)
            if (seen.insert(n.values).second) queue.push_back(std::move(n));
    }
    std::vector<ParamVector> out;
    out.reserve(seen.size());
    for (const auto& vals : seen) out.emplace_back(vals, v.extra_h);
    return out;
}

ParamVector canonical_params(const ParamVector& v) {
    std::vector<ParamVector> all = orbit(v);
    return all.front(); // orbit() returns in canonical ascending order
}

bool slocc_equivalent_params(const ParamVector& a, const ParamVector& b) {
    if (a.m() != b.m() || a.extra_h != b.extra_h) return false;
    return canonical_params(a) == canonical_params(b);
}

// ---------------------------------------------------------------------------
// Group relations.

namespace {

using Generator = std::function<ParamVector(const ParamVector&)>;

std::vector<Generator> sigma_assignment(int m, bool extra_h) {
    // sigma_1..sigma_{m-3} = A_i, sigma_{m-2} = F, sigma_{m-1} = G, sigma_m = H.
    std::vector<Generator> sigmas;
    for (int i = 1; i <= m - 3; ++i)
        sigmas.push_back([i](const ParamVector& v) { return gen_swap(v, i); });
    sigmas.push_back([](const ParamVector& v) { return gen_f(v); });
    sigmas.push_back([](const ParamVector& v) { return gen_g(v); });
    if (extra_h) sigmas.push_back([](const ParamVector& v) { return gen_h(v); });
    return sigmas;
}

ParamVector random_param_vector(int m, bool extra_h, std::mt19937_64& rng) {
    auto next_scalar = [&rng]() {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = static_cast<long>(rng() % 9) + 1;
        Rational re(num, den);
        re.canonicalize();
        Rational im(0);
        if (rng() % 4 == 0) {
            im = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
            im.canonicalize();
        }
        return GaussianRational(re, im);
    };
    while (true) {
        std::vector<GaussianRational> vals;
        for (int k = 0; k < m - 2; ++k) vals.push_back(next_scalar());
        try {
            return ParamVector(std::move(vals), extra_h);
        } catch (const DomainError&) {
            // collision or forbidden value; redraw
        }
    }
}

} // namespace

bool RelationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string RelationReport::str() const {
    std::ostringstream os;
    for (const auto& c : checks) os << (c.passed ? "pass " : "FAIL ") << c.name << "\n";
    return os.str();
}

RelationReport verify_group_relations(int m, bool extra_h, int trials, unsigned long seed) {
    if (m < 3) throw DomainError("group relations need m >= 3");
    auto sigmas = sigma_assignment(m, extra_h);
    const int g = static_cast<int>(sigmas.size());
    std::mt19937_64 rng(seed);
    std::vector<ParamVector> samples;
    samples.reserve(trials);
    for (int t = 0; t < trials; ++t) samples.push_back(random_param_vector(m, extra_h, rng));

    RelationReport report;
    auto check_all = [&](const std::string& name, auto&& lhs, auto&& rhs) {
        bool ok = true;
        for (const auto& v : samples)
            if (lhs(v) != rhs(v)) {
                ok = false;
                break;
            }
        report.checks.push_back({name, ok});
    };

    for (int i = 0; i < g; ++i)
        check_all("sigma_" + std::to_string(i + 1) + "^2 = 1",
                  [&](const ParamVector& v) { return sigmas[i](sigmas[i](v)); },
                  [](const ParamVector& v) { return v; });
    for (int i = 0; i < g; ++i)
        for (int j = i + 2; j < g; ++j)
            check_all("sigma_" + std::to_string(i + 1) + " commutes with sigma_" + std::to_string(j + 1),
                      [&](const ParamVector& v) { return sigmas[i](sigmas[j](v)); },
                      [&](const ParamVector& v) { return sigmas[j](sigmas[i](v)); });
    for (int i = 0; i + 1 < g; ++i)
        check_all("braid sigma_" + std::to_string(i + 1) + ", sigma_" + std::to_string(i + 2),
                  [&](const ParamVector& v) { return sigmas[i](sigmas[i + 1](sigmas[i](v))); },
                  [&](const ParamVector& v) { return sigmas[i + 1](sigmas[i](sigmas[i + 1](v))); });
    return report;
}

// ---------------------------------------------------------------------------
// Eigenvalue-configuration canonicalization.

std::optional<EigenDescriptor> canonical_eigen_descriptor(const std::vector<EigenGroup>& groups) {
    const int k = static_cast<int>(groups.size());
    if (k < 3) return std::nullopt;

    auto descriptor_less = [](const EigenDescriptor& x, const EigenDescriptor& y) {
        for (size_t t = 0; t < x.roles.size(); ++t) {
            if (x.roles[t] != y.roles[t]) return partition_before(x.roles[t], y.roles[t]);
        }
        for (size_t t = 0; t < x.values.size(); ++t)
            if (x.values[t] != y.values[t]) return scalar_less(x.values[t], y.values[t]);
        return false;
    };

    std::optional<EigenDescriptor> best;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                if (a == b || a == c || b == c) continue;
                EigenDescriptor d;
                d.roles = {groups[a].blocks, groups[b].blocks, groups[c].blocks};
                std::vector<std::pair<Partition, GaussianRational>> carriers;
                for (int t = 0; t < k; ++t) {
                    if (t == a || t == b || t == c) continue;
                    carriers.emplace_back(
                        groups[t].blocks,
                        cross_ratio(groups[a].point, groups[b].point, groups[c].point, groups[t].point));
                }
                std::sort(carriers.begin(), carriers.end(), [](const auto& x, const auto& y) {
                    if (x.first != y.first) return partition_before(x.first, y.first);
                    return scalar_less(x.second, y.second);
                });
                for (auto& [part, val] : carriers) {
                    d.roles.push_back(std::move(part));
                    d.values.push_back(std::move(val));
                }
                if (!best || descriptor_less(d, *best)) best = std::move(d);
            }
    return best;
}

} // namespace slocc::nonlocal
