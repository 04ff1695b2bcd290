#ifndef ANGLEPOLY_SERIALIZE_HPP
#define ANGLEPOLY_SERIALIZE_HPP

#include <json.hpp>

#include "anglepoly/cyclic.hpp"
#include "anglepoly/duality.hpp"
#include "anglepoly/geometry.hpp"
#include "anglepoly/scmap.hpp"
#include "anglepoly/sweep.hpp"
#include "anglepoly/tours.hpp"

namespace anglepoly {

using Json = nlohmann::json;

/// Rounds to 12 significant digits so that dumps are stable across platforms.
double round12(double x);

Json encode(const Rational& q);
Json encode(const std::vector<Rational>& xs);
Json encode(const std::vector<double>& xs);
Json encode(const IndexSet& s);
Json encode(const Substring& sub);
Json encode(const TieRecord& t);
Json encode(const SubsetTie& t);
Json encode(const DipolePoles& p);
Json encode(const Face& f);
Json encode(const FaceLattice& lat);
Json encode(const VertexFigureShape& v);
Json encode(const CyclicLattice& lat);
Json encode(const DualityReport& r);
Json encode(const Point2& p);
Json encode(const PolygonRealization& p);
Json encode(const AreaSignature& a);
Json encode(const Feasibility& f);
Json encode(const Tour& t);
Json encode(const Transition& t);
Json encode(const SweepReport& r);
Json encode(const FixedLengthsShape& s);
Json encode(const KMResult& r);
Json encode(const ExponentProbe& p);

/// Two-space indented dump with sorted keys and a trailing newline.
std::string dump(const Json& j);

}   // namespace anglepoly

#endif
