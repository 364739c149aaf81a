#ifndef MINTB_IO_HPP
#define MINTB_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mintb/flow.hpp"
#include "mintb/latency.hpp"
#include "mintb/network.hpp"
#include "mintb/rational.hpp"

namespace mintb {

// One-record-per-line instance text ('#' starts a comment):
//   network <n> <m> <s-id> <t-id>
//   edge <id> <tail> <head> <a> <b>
//   flow <edge-id> <p/q>        (optional annotation)
//   demand <p/q>                (optional)
// Rationals are read and written exactly, never through floating point.
struct Instance {
  Network net;
  Latencies lat;
  std::optional<Rational> demand;
  std::optional<std::vector<Rational>> flow;  // by edge index
};

Instance parse_instance(std::istream& in);

void write_instance(std::ostream& out, const Network& net, const Latencies& lat,
                    const std::optional<Rational>& demand,
                    const std::optional<std::vector<Rational>>& flow,
                    const std::vector<std::string>* edge_names = nullptr);

// Toll output: nonzero `toll <edge-id> <p/q>` lines by edge index, then
// `support <k>` and `induced-length <p/q>` trailers.
void write_tolls(std::ostream& out, const Network& net, const TollVector& tolls,
                 const Rational& induced_length);

// Reads toll lines back; `support`/`induced-length` trailers are checked for
// consistency when present.
TollVector parse_tolls(std::istream& in, const Network& net);

// Flow output: nonzero `flow` lines plus a `demand` trailer.
void write_flow(std::ostream& out, const Network& net, const Flow& flow);

// FNV-1a 64 digest of the canonical instance text, as fixed-width hex.
std::string instance_digest(const Network& net, const Latencies& lat,
                            const std::optional<Rational>& demand,
                            const std::optional<std::vector<Rational>>& flow);

}  // namespace mintb

#endif
