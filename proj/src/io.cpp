#include "mintb/io.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>

#include "mintb/errors.hpp"

namespace mintb {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

long long parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw ParseError("bad integer '" + tok + "'", line_no);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + tok + "'", line_no);
  }
}

Rational parse_rational_at(const std::string& tok, int line_no) {
  try {
    return parse_rational(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no);
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long want_n = 0, want_m = 0, s_label = 0, t_label = 0;
  std::vector<std::array<std::string, 5>> edge_records;
  std::vector<std::pair<std::string, std::string>> flow_records;
  std::optional<Rational> demand;
  std::vector<int> edge_lines, flow_lines;
  int header_line = 0, demand_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (kind == "network") {
      if (have_header) throw ParseError("duplicate network header", line_no);
      if (tokens.size() != 5) throw ParseError("network needs <n> <m> <s> <t>", line_no);
      want_n = parse_int(tokens[1], line_no);
      want_m = parse_int(tokens[2], line_no);
      s_label = parse_int(tokens[3], line_no);
      t_label = parse_int(tokens[4], line_no);
      have_header = true;
      header_line = line_no;
    } else if (kind == "edge") {
      if (tokens.size() != 6) {
        throw ParseError("edge needs <id> <tail> <head> <a> <b>", line_no);
      }
      edge_records.push_back({tokens[1], tokens[2], tokens[3], tokens[4], tokens[5]});
      edge_lines.push_back(line_no);
    } else if (kind == "flow") {
      if (tokens.size() != 3) throw ParseError("flow needs <edge-id> <value>", line_no);
      flow_records.push_back({tokens[1], tokens[2]});
      flow_lines.push_back(line_no);
    } else if (kind == "demand") {
      if (tokens.size() != 2) throw ParseError("demand needs <value>", line_no);
      if (demand) throw ParseError("duplicate demand", line_no);
      demand = parse_rational_at(tokens[1], line_no);
      demand_line = line_no;
    } else {
      throw ParseError("unknown record '" + kind + "'", line_no);
    }
  }
  if (!have_header) throw ParseError("missing network header", line_no);
  if (s_label == t_label) throw ParseError("source equals sink", header_line);
  if (demand && *demand < 0) throw ParseError("negative demand", demand_line);

  Instance inst{Network(s_label, t_label), {}, std::move(demand), std::nullopt};
  for (std::size_t i = 0; i < edge_records.size(); ++i) {
    const auto& rec = edge_records[i];
    const int line_at = edge_lines[i];
    const long long id = parse_int(rec[0], line_at);
    const long long tail = parse_int(rec[1], line_at);
    const long long head = parse_int(rec[2], line_at);
    const Rational a = parse_rational_at(rec[3], line_at);
    const Rational b = parse_rational_at(rec[4], line_at);
    if (a < 0 || b < 0) throw ParseError("latency coefficients must be >= 0", line_at);
    try {
      inst.net.add_edge(id, tail, head);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_at);
    }
    inst.lat.push_back(LinearLatency{a, b});
  }
  if (want_m != inst.net.edge_count()) {
    throw ParseError("header claims " + std::to_string(want_m) + " edges, file has " +
                         std::to_string(inst.net.edge_count()),
                     header_line);
  }
  if (want_n != inst.net.node_count()) {
    throw ParseError("header claims " + std::to_string(want_n) + " nodes, file has " +
                         std::to_string(inst.net.node_count()),
                     header_line);
  }
  if (!flow_records.empty()) {
    std::vector<Rational> flow(inst.net.edge_count(), Rational(0));
    std::vector<char> seen(inst.net.edge_count(), 0);
    for (std::size_t i = 0; i < flow_records.size(); ++i) {
      const int line_at = flow_lines[i];
      const long long id = parse_int(flow_records[i].first, line_at);
      const int index = inst.net.edge_index(id);
      if (index < 0) throw ParseError("flow on unknown edge " + std::to_string(id), line_at);
      if (seen[index]) {
        throw ParseError("duplicate flow for edge " + std::to_string(id), line_at);
      }
      seen[index] = 1;
      flow[index] = parse_rational_at(flow_records[i].second, line_at);
      if (flow[index] < 0) throw ParseError("negative flow", line_at);
    }
    inst.flow = std::move(flow);
  }
  return inst;
}

void write_instance(std::ostream& out, const Network& net, const Latencies& lat,
                    const std::optional<Rational>& demand,
                    const std::optional<std::vector<Rational>>& flow,
                    const std::vector<std::string>* edge_names) {
  out << "network " << net.node_count() << " " << net.edge_count() << " "
      << net.node_label(net.source()) << " " << net.node_label(net.sink()) << "\n";
  for (int e = 0; e < net.edge_count(); ++e) {
    const auto& edge = net.edge(e);
    out << "edge " << edge.label << " " << net.node_label(edge.tail) << " "
        << net.node_label(edge.head) << " " << to_string(lat[e].slope) << " "
        << to_string(lat[e].intercept);
    if (edge_names) out << " # " << (*edge_names)[e];
    out << "\n";
  }
  if (demand) out << "demand " << to_string(*demand) << "\n";
  if (flow) {
    for (int e = 0; e < net.edge_count(); ++e) {
      if ((*flow)[e] != 0) {
        out << "flow " << net.edge_label(e) << " " << to_string((*flow)[e]) << "\n";
      }
    }
  }
}

void write_tolls(std::ostream& out, const Network& net, const TollVector& tolls,
                 const Rational& induced_length) {
  for (int e = 0; e < net.edge_count(); ++e) {
    if (tolls.toll[e] > 0) {
      out << "toll " << net.edge_label(e) << " " << to_string(tolls.toll[e]) << "\n";
    }
  }
  out << "support " << tolls.support_size() << "\n";
  out << "induced-length " << to_string(induced_length) << "\n";
}

TollVector parse_tolls(std::istream& in, const Network& net) {
  TollVector tolls{std::vector<Rational>(net.edge_count(), Rational(0))};
  std::optional<int> claimed_support;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "toll") {
      if (tokens.size() != 3) throw ParseError("toll needs <edge-id> <value>", line_no);
      const long long id = parse_int(tokens[1], line_no);
      const int index = net.edge_index(id);
      if (index < 0) throw ParseError("toll on unknown edge " + std::to_string(id), line_no);
      tolls.toll[index] = parse_rational_at(tokens[2], line_no);
      if (tolls.toll[index] < 0) throw ParseError("negative toll", line_no);
    } else if (tokens[0] == "support") {
      if (tokens.size() != 2) throw ParseError("support needs <k>", line_no);
      claimed_support = static_cast<int>(parse_int(tokens[1], line_no));
    } else if (tokens[0] == "induced-length") {
      if (tokens.size() != 2) throw ParseError("induced-length needs <value>", line_no);
      parse_rational_at(tokens[1], line_no);
    } else {
      throw ParseError("unknown record '" + tokens[0] + "' in toll file", line_no);
    }
  }
  if (claimed_support && *claimed_support != tolls.support_size()) {
    throw ParseError("support trailer does not match the toll lines", line_no);
  }
  return tolls;
}

void write_flow(std::ostream& out, const Network& net, const Flow& flow) {
  for (int e = 0; e < net.edge_count(); ++e) {
    if (flow.edge_flow[e] != 0) {
      out << "flow " << net.edge_label(e) << " " << to_string(flow.edge_flow[e]) << "\n";
    }
  }
  out << "demand " << to_string(flow.demand) << "\n";
}

std::string instance_digest(const Network& net, const Latencies& lat,
                            const std::optional<Rational>& demand,
                            const std::optional<std::vector<Rational>>& flow) {
  std::ostringstream canon;
  write_instance(canon, net, lat, demand, flow);
  const std::string text = canon.str();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace mintb
