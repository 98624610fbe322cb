// Shared fixture access for the test binaries.
#pragma once

#include <map>
#include <string>

#include "kzero/io.hpp"
#include "kzero/verify.hpp"

namespace testsup {

inline std::string fixture_dir() { return KZERO_FIXTURE_DIR; }

inline const kzero::Corpus& corpus() {
    static kzero::Corpus c = [] {
        kzero::Corpus out;
        out.add_paths({fixture_dir()});
        return out;
    }();
    return c;
}

inline kzero::RingPtr ring(const std::string& name) {
    return corpus().rings.at(name).ring;
}

inline kzero::FiniteGroup group(const std::string& name) {
    return corpus().groups.at(name);
}

inline kzero::RingFunctor functor(const std::string& name) {
    return kzero::resolve_functor(corpus().functor_docs.at(name), corpus().rings);
}

// tensor product of two fusion rings: basis pairs (ordered a-major),
// componentwise duals, N products; a generator for property tests
inline kzero::RingPtr product_ring(const kzero::FusionRing& a, const kzero::FusionRing& b) {
    const int na = a.rank(), nb = b.rank();
    auto idx = [nb](int i, int j) { return i * nb + j; };
    std::vector<int> dual(na * nb);
    std::vector<std::string> labels(na * nb);
    std::map<std::array<int, 3>, long long> nz;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            dual[idx(i, j)] = idx(a.dual(i), b.dual(j));
            labels[idx(i, j)] = a.label(i) + "*" + b.label(j);
        }
    for (const auto& [ka, va] : a.nonzeros())
        for (const auto& [kb, vb] : b.nonzeros()) {
            if (va == 0 || vb == 0) continue;
            nz[{idx(ka[0], kb[0]), idx(ka[1], kb[1]), idx(ka[2], kb[2])}] = va * vb;
        }
    return std::make_shared<kzero::FusionRing>(a.name() + "x" + b.name(), na * nb,
                                               std::move(dual), std::move(labels),
                                               std::move(nz));
}

}  // namespace testsup
