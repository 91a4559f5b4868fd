#include "minktree/packing.hpp"

#include "minktree/rng.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace minktree {

namespace {

bool certExact(const PackingCertificate& cert) {
    if (!cert.norm.exactCapable()) return false;
    for (const auto& v : cert.vectors)
        if (!vecExact(v)) return false;
    return true;
}

Vec unitAxis(int dim, int axis, int sign) {
    Vec v(dim, Scalar(0));
    v[axis] = Scalar(sign);
    return v;
}

// ---- stochastic search internals (plain doubles throughout) ----

using Config = std::vector<std::vector<double>>;

double minPairDist(const Norm& norm, const Config& vecs) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> diff(vecs[0].size());
    for (size_t i = 0; i < vecs.size(); ++i) {
        for (size_t j = i + 1; j < vecs.size(); ++j) {
            for (size_t c = 0; c < diff.size(); ++c) diff[c] = vecs[i][c] - vecs[j][c];
            best = std::min(best, norm.evalD(diff));
        }
    }
    return best;
}

Config randomConfig(const Norm& norm, int k, Rng& rng) {
    Config vecs(k);
    for (auto& v : vecs) {
        v.resize(norm.dim());
        double len = 0;
        do {
            for (auto& c : v) c = rng.uniform(-1.0, 1.0);
            len = norm.evalD(v);
        } while (len < 1e-3);
        v = norm.normalizeD(v);
    }
    return vecs;
}

void anneal(const Norm& norm, Config& vecs, Rng& rng, long long budget) {
    const int k = static_cast<int>(vecs.size());
    const int d = norm.dim();
    double obj = minPairDist(norm, vecs);
    Config best = vecs;
    double bestObj = obj;

    const double t0 = 0.25, t1 = 1e-6;
    std::vector<double> cand(d);
    for (long long it = 0; it < budget; ++it) {
        double frac = static_cast<double>(it) / static_cast<double>(budget);
        double temp = t0 * std::pow(t1 / t0, frac);
        double sigma = 0.02 + 1.5 * temp;

        int i = rng.uniformInt(k);
        for (int c = 0; c < d; ++c) cand[c] = vecs[i][c] + sigma * rng.normal();
        double len = norm.evalD(cand);
        if (len < 1e-9) continue;
        for (int c = 0; c < d; ++c) cand[c] /= len;

        std::swap(vecs[i], cand);
        double next = minPairDist(norm, vecs);
        double delta = next - obj;
        if (delta >= 0 || rng.uniform() < std::exp(delta / temp)) {
            obj = next;
            if (obj > bestObj) {
                bestObj = obj;
                best = vecs;
            }
        } else {
            std::swap(vecs[i], cand);  // reject
        }
    }
    vecs = best;
}

// Monotone local ascent on the maximin objective: per point, per axis,
// shrinking step; every accepted move strictly improves the global minimum.
// Sweeps per step level are capped, since sliding along flat unit-sphere
// faces can otherwise grind out sub-1e-12 gains indefinitely.
double polish(const Norm& norm, Config& vecs) {
    const int k = static_cast<int>(vecs.size());
    const int d = norm.dim();
    double obj = minPairDist(norm, vecs);
    for (double step = 0.05; step > 1e-9; step *= 0.5) {
        for (int sweep = 0; sweep < 300; ++sweep) {
            bool improved = false;
            for (int i = 0; i < k; ++i) {
                for (int axis = 0; axis < d; ++axis) {
                    for (double sign : {1.0, -1.0}) {
                        std::vector<double> saved = vecs[i];
                        vecs[i][axis] += sign * step;
                        double len = norm.evalD(vecs[i]);
                        if (len < 1e-9) {
                            vecs[i] = saved;
                            continue;
                        }
                        for (int c = 0; c < d; ++c) vecs[i][c] /= len;
                        double next = minPairDist(norm, vecs);
                        if (next > obj + 1e-12) {
                            obj = next;
                            improved = true;
                        } else {
                            vecs[i] = saved;
                        }
                    }
                }
            }
            if (!improved) break;
        }
    }
    return obj;
}

// Rounds coordinates to a small common denominator and keeps the result only
// if every vector is exactly unit under the norm. Upgrades near-rational
// optima (cube corners, axis vectors, half-diagonals) to exact certificates.
// The tolerance can be generous: exact verification downstream rejects any
// snap that lands on the wrong configuration.
std::optional<std::vector<Vec>> snapToRational(const Norm& norm, const Config& vecs,
                                               double snapTol) {
    if (!norm.exactCapable()) return std::nullopt;
    for (long long q : {1, 2, 3, 4, 5, 6, 8, 10, 12, 16, 24}) {
        bool ok = true;
        std::vector<Vec> exact;
        exact.reserve(vecs.size());
        for (const auto& v : vecs) {
            Vec ev(v.size());
            for (size_t c = 0; c < v.size() && ok; ++c) {
                long long num = std::llround(v[c] * static_cast<double>(q));
                Rational r(num, q);
                if (std::fabs(v[c] - r.convert_to<double>()) > snapTol) ok = false;
                ev[c] = Scalar(r);
            }
            if (!ok) break;
            Scalar len = norm.eval(ev);
            if (!len.exact() || len.rat() != 1) {
                ok = false;
                break;
            }
            exact.push_back(std::move(ev));
        }
        if (ok) return exact;
    }
    return std::nullopt;
}

struct RestartOutcome {
    double objective = -1;
    std::vector<Vec> vectors;  // exact when snapped
    bool exact = false;
};

bool lexLess(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        for (size_t c = 0; c < a[i].size(); ++c) {
            int cmp = Scalar::compare(a[i][c], b[i][c]);
            if (cmp != 0) return cmp < 0;
        }
    return false;
}

RestartOutcome runRestart(const Norm& norm, const SearchParams& params, int restart) {
    Rng rng(Rng::substream(params.seed, static_cast<uint64_t>(restart)));
    Config vecs = randomConfig(norm, params.k, rng);
    anneal(norm, vecs, rng, params.budget);
    double obj = polish(norm, vecs);

    RestartOutcome out;
    out.objective = obj;
    out.vectors.reserve(vecs.size());
    for (const auto& v : vecs) {
        Vec sv(v.size());
        for (size_t c = 0; c < v.size(); ++c) sv[c] = Scalar(v[c]);
        out.vectors.push_back(std::move(sv));
    }
    for (double snapTol : {1e-4, 5e-3}) {
        auto snapped = snapToRational(norm, vecs, snapTol);
        if (!snapped) continue;
        Scalar snappedMin = certificateMinPairwise(norm, *snapped);
        double snappedObj = snappedMin.value();
        // keep the snap when it does not lose measurable objective
        if (snappedObj >= obj - 1e-9) {
            out.objective = snappedObj;
            out.vectors = std::move(*snapped);
            out.exact = true;
            break;
        }
    }
    return out;
}

}  // namespace

Scalar certificateMinPairwise(const Norm& norm, const std::vector<Vec>& vectors) {
    if (vectors.size() < 2) throw InvalidInstanceError("certificate needs at least two vectors");
    bool have = false;
    Scalar best(0);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (size_t j = i + 1; j < vectors.size(); ++j) {
            Scalar d = norm.dist(vectors[i], vectors[j]);
            if (!have || Scalar::compare(d, best) < 0) {
                best = d;
                have = true;
            }
        }
    return best;
}

bool verifyCertificate(const PackingCertificate& cert, double tol, double strictMargin) {
    if (cert.vectors.empty()) return false;
    for (const auto& v : cert.vectors)
        if (static_cast<int>(v.size()) != cert.norm.dim())
            throw std::invalid_argument("certificate vector dimension mismatch");
    const bool exact = certExact(cert);
    for (const auto& v : cert.vectors) {
        Scalar len = cert.norm.eval(v);
        if (exact && len.exact()) {
            if (len.rat() != 1) return false;
        } else if (std::fabs(len.value() - 1.0) > tol) {
            return false;
        }
    }
    if (cert.vectors.size() == 1) return true;
    Scalar mp = certificateMinPairwise(cert.norm, cert.vectors);
    if (exact && mp.exact()) {
        if (cert.strict) return mp.rat() > 1;
        return mp.rat() >= 1;
    }
    if (cert.strict) return mp.value() >= 1.0 + strictMargin;
    return mp.value() >= 1.0 - tol;
}

PackingCertificate knownPacking(const std::string& name, int dim) {
    PackingCertificate cert;
    if (name == "hexagon-l2") {
        cert.norm = Norm::l2(2);
        for (int i = 0; i < 6; ++i) {
            double a = M_PI * i / 3.0;
            cert.vectors.push_back({Scalar(std::cos(a)), Scalar(std::sin(a))});
        }
    } else if (name == "pentagon-l2-strict") {
        cert.norm = Norm::l2(2);
        for (int i = 0; i < 5; ++i) {
            double a = 2.0 * M_PI * i / 5.0;
            cert.vectors.push_back({Scalar(std::cos(a)), Scalar(std::sin(a))});
        }
    } else if (name == "axes-l1-strict") {
        cert.norm = Norm::l1(2);
        for (int axis = 0; axis < 2; ++axis)
            for (int sign : {1, -1}) cert.vectors.push_back(unitAxis(2, axis, sign));
    } else if (name == "signs-linf-strict") {
        if (dim < 1 || dim > 12) throw std::invalid_argument("signs-linf-strict needs dim in 1..12");
        cert.norm = Norm::linf(dim);
        for (int mask = 0; mask < (1 << dim); ++mask) {
            Vec v(dim);
            for (int c = 0; c < dim; ++c) v[c] = Scalar((mask >> c) & 1 ? 1 : -1);
            cert.vectors.push_back(std::move(v));
        }
    } else if (name == "grid-linf") {
        if (dim < 1 || dim > 8) throw std::invalid_argument("grid-linf needs dim in 1..8");
        cert.norm = Norm::linf(dim);
        long long total = 1;
        for (int c = 0; c < dim; ++c) total *= 3;
        for (long long code = 0; code < total; ++code) {
            Vec v(dim);
            long long rest = code;
            bool zero = true;
            for (int c = 0; c < dim; ++c) {
                int digit = static_cast<int>(rest % 3) - 1;
                rest /= 3;
                v[c] = Scalar(digit);
                if (digit != 0) zero = false;
            }
            if (!zero) cert.vectors.push_back(std::move(v));
        }
    } else if (name == "icosahedron-l2-strict") {
        cert.norm = Norm::l2(3);
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        const double len = std::sqrt(1.0 + phi * phi);
        for (int cyc = 0; cyc < 3; ++cyc) {
            for (int s1 : {1, -1}) {
                for (int s2 : {1, -1}) {
                    std::array<double, 3> raw{};
                    raw[cyc] = 0.0;
                    raw[(cyc + 1) % 3] = s1 * 1.0;
                    raw[(cyc + 2) % 3] = s2 * phi;
                    cert.vectors.push_back(
                        {Scalar(raw[0] / len), Scalar(raw[1] / len), Scalar(raw[2] / len)});
                }
            }
        }
    } else if (name == "crosspolytope-l1") {
        if (dim < 1) throw std::invalid_argument("crosspolytope-l1 needs a positive dim");
        cert.norm = Norm::l1(dim);
        for (int axis = 0; axis < dim; ++axis)
            for (int sign : {1, -1}) cert.vectors.push_back(unitAxis(dim, axis, sign));
    } else {
        throw ParseError("unknown packing construction: " + name);
    }
    cert.min_pairwise = certificateMinPairwise(cert.norm, cert.vectors);
    if (cert.min_pairwise.exact())
        cert.strict = cert.min_pairwise.rat() > 1;
    else
        cert.strict = cert.min_pairwise.value() > 1.0 + 1e-9;
    return cert;
}

SearchResult searchLowerBound(const Norm& norm, const SearchParams& params) {
    if (params.k < 2) throw std::invalid_argument("search needs k >= 2");
    if (params.restarts < 1 || params.budget < 1)
        throw std::invalid_argument("search needs positive restarts and budget");

    std::vector<RestartOutcome> outcomes(params.restarts);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> cursor{0};
    auto worker = [&] {
        while (true) {
            int r = cursor.fetch_add(1);
            if (r >= params.restarts) return;
            outcomes[r] = runRestart(norm, params, r);
        }
    };
    std::vector<std::future<void>> futs;
    for (unsigned w = 1; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : futs) f.get();

    // deterministic merge: best objective, ties by lexicographically
    // smallest vector list
    const RestartOutcome* best = &outcomes[0];
    for (const auto& o : outcomes) {
        if (o.objective > best->objective ||
            (o.objective == best->objective && lexLess(o.vectors, best->vectors)))
            best = &o;
    }

    SearchResult result;
    result.best_objective = best->objective;
    result.cert.norm = norm;
    result.cert.vectors = best->vectors;
    result.cert.min_pairwise = certificateMinPairwise(norm, best->vectors);
    result.cert.strict = params.strict;
    result.cert.seed = params.seed;
    result.found = verifyCertificate(result.cert, params.tol, params.strict_margin);
    return result;
}

const std::vector<KnownValue>& knownValuesTable() {
    static const std::vector<KnownValue> table = {
        {"euclidean-disc", "H", 6, 6, false, "planar non-parallelogram bound; regular hexagon attains it"},
        {"euclidean-disc", "Hs", 5, 5, false, "planar non-parallelogram bound; regular pentagon attains it"},
        {"parallelogram", "H", 8, 8, false, "planar parallelogram bound; 3x3 grid minus center attains it"},
        {"parallelogram", "Hs", 4, 4, false, "planar parallelogram bound; the four axis directions attain it"},
        {"l1-plane", "H", 8, 8, false, "the l1 disc is linearly a parallelogram"},
        {"l1-plane", "Hs", 4, 4, false, "the l1 disc is linearly a parallelogram"},
        {"planar-non-parallelogram", "H", 6, 6, false, "holds for every planar convex body other than parallelograms"},
        {"planar-non-parallelogram", "Hs", 5, 5, false, "holds for every planar convex body other than parallelograms"},
        {"octahedron", "H", 18, 18, false, "l1 ball in three dimensions; axis and half-diagonal vectors attain it"},
        {"octahedron", "Hs", 13, 14, false, "only the interval is settled"},
        {"cube", "H", 0, 0, true, "3^d - 1: all nonzero {-1,0,1} vectors"},
        {"cube", "Hs", 0, 0, true, "2^d: all sign vectors"},
        {"euclidean-ball-3d", "H", 12, 12, false, "icosahedron directions attain it"},
        {"euclidean-ball-3d", "Hs", 12, 12, false, "equals the non-strict value in three dimensions"},
    };
    return table;
}

std::optional<std::pair<int, int>> lookupKnownValue(const std::string& body,
                                                    const std::string& quantity, int dim) {
    for (const auto& kv : knownValuesTable()) {
        if (kv.body != body || kv.quantity != quantity) continue;
        if (!kv.parametric) return std::make_pair(kv.lo, kv.hi);
        if (dim < 1 || dim > 18) return std::nullopt;
        int v;
        if (quantity == "H") {
            long long p = 1;
            for (int i = 0; i < dim; ++i) p *= 3;
            v = static_cast<int>(p - 1);
        } else {
            v = 1 << dim;
        }
        return std::make_pair(v, v);
    }
    return std::nullopt;
}

namespace {

// Corner count of a 2d polytope ball: vertices lying on two facets.
int polygonCornerCount(const Norm& norm) {
    int corners = 0;
    for (const auto& v : norm.polyVertices()) {
        int onFacets = 0;
        for (const auto& h : norm.polyFacets()) {
            Scalar dot(0);
            for (size_t c = 0; c < v.size(); ++c) dot += h[c] * v[c];
            if (dot.exact() && dot.rat() == 1) ++onFacets;
        }
        if (onFacets >= 2) ++corners;
    }
    return corners;
}

}  // namespace

std::optional<int> knownStrictHadwiger(const Norm& norm) {
    const int d = norm.dim();
    if (d == 1) return 2;
    if (d == 2) {
        switch (norm.kind()) {
            case NormKind::L1:
            case NormKind::Linf:
                return 4;
            case NormKind::L2:
            case NormKind::Lp:
                return 5;
            case NormKind::Poly:
                return polygonCornerCount(norm) == 4 ? 4 : 5;
        }
    }
    if (norm.kind() == NormKind::Linf && d <= 18) return 1 << d;
    if (norm.kind() == NormKind::L2 && d == 3) return 12;
    return std::nullopt;
}

std::optional<int> knownHadwiger(const Norm& norm) {
    const int d = norm.dim();
    if (d == 1) return 2;
    if (d == 2) {
        switch (norm.kind()) {
            case NormKind::L1:
            case NormKind::Linf:
                return 8;
            case NormKind::L2:
            case NormKind::Lp:
                return 6;
            case NormKind::Poly:
                return polygonCornerCount(norm) == 4 ? 8 : 6;
        }
    }
    if (norm.kind() == NormKind::Linf && d <= 18) {
        long long p = 1;
        for (int i = 0; i < d; ++i) p *= 3;
        return static_cast<int>(p - 1);
    }
    if (norm.kind() == NormKind::L2 && d == 3) return 12;
    if (norm.kind() == NormKind::L1 && d == 3) return 18;
    return std::nullopt;
}

}  // namespace minktree
