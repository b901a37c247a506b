#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "gkz/fan.hpp"
#include "gkz/lattice.hpp"
#include "gkz/mirror.hpp"
#include "gkz/ring.hpp"
#include "gkz/series.hpp"
#include "gkz/verifier.hpp"

namespace gkz {

using Json = nlohmann::ordered_json;

/// A configuration file after validation. Index sets in files are 1-based.
struct Document {
    std::string name;
    PointConfiguration config;
    RelationLattice lattice;
    std::optional<RatVec> gamma;
    std::optional<std::vector<Index>> chamber;
    std::optional<MirrorModel> model;  // present when the file carries kappa
};

/// Throws SchemaError with the offending field path.
Document parse_document(const Json& doc);
Document load_document(const std::string& path);

Json rat_json(const Rat& q);
Json index_json(const Index& s);
Json int_vec_json(const IntVec& v);
Json triangulation_json(const PointConfiguration& config, const RegularTriangulation& T);
Json ring_json(const GradedQuotientRing& ring);
Json series_json(const TruncatedGammaSeries& s);
Json mirror_json(const MirrorModel& model, int order, const MirrorResult& r);

/// Two-space indented, key order fixed by construction.
std::string dump(const Json& j);

}  // namespace gkz
