#include "rtk/serialize.hpp"

#include <cstdio>
#include <json.hpp>

#include "rtk/errors.hpp"

namespace rtk {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson state_list(std::span<const StateSymbol> states) {
  ojson arr = ojson::array();
  for (StateSymbol s : states) arr.push_back(render_state(s));
  return arr;
}

template <typename Map>
ojson state_histogram(const Map& counts) {
  ojson obj = ojson::object();
  for (const auto& [state, n] : counts) obj[render_state(state)] = n;
  return obj;
}

StateSymbol state_field(const ojson& v) {
  if (!v.is_string()) throw Error("trajectory JSON: state must be a string");
  const auto s = parse_state(v.get<std::string>());
  if (!s) throw Error("trajectory JSON: unknown state '" + v.get<std::string>() + "'");
  return *s;
}

}  // namespace

std::string join_states(std::span<const StateSymbol> states, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i > 0) out += sep;
    out += render_state(states[i]);
  }
  return out;
}

std::string trajectory_to_json(const Trajectory& t) {
  ojson doc;
  doc["release_id"] = t.release_id;
  doc["flavor"] = std::string(flavor_name(t.flavor));
  doc["window"] = {{"inception", format_timestamp(t.window.inception)},
                   {"ending", format_timestamp(t.window.ending)}};
  ojson segments = ojson::array();
  for (const Segment& s : t.segments) {
    ojson seg;
    seg["state"] = render_state(s.state);
    if (t.flavor == Flavor::IssuesBased) {
      seg["start"] = format_timestamp(from_seconds(s.start));
      seg["end"] = format_timestamp(from_seconds(s.end));
    } else {
      seg["start"] = s.start;
      seg["end"] = s.end;
    }
    segments.push_back(std::move(seg));
  }
  doc["segments"] = std::move(segments);
  return dump(doc);
}

Trajectory trajectory_from_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
    Trajectory t;
    t.release_id = doc.at("release_id").get<std::string>();
    const auto flavor = parse_flavor(doc.at("flavor").get<std::string>());
    if (!flavor) throw Error("trajectory JSON: unknown flavor");
    t.flavor = *flavor;
    t.window.release_id = t.release_id;
    t.window.inception = parse_timestamp(doc.at("window").at("inception").get<std::string>());
    t.window.ending = parse_timestamp(doc.at("window").at("ending").get<std::string>());
    for (const ojson& seg : doc.at("segments")) {
      Segment s;
      s.state = state_field(seg.at("state"));
      if (t.flavor == Flavor::IssuesBased) {
        s.start = to_seconds(parse_timestamp(seg.at("start").get<std::string>()));
        s.end = to_seconds(parse_timestamp(seg.at("end").get<std::string>()));
      } else {
        s.start = seg.at("start").get<std::int64_t>();
        s.end = seg.at("end").get<std::int64_t>();
      }
      t.segments.push_back(s);
    }
    t.validate();
    return t;
  } catch (const ojson::exception& e) {
    throw Error(std::string("trajectory JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("trajectory JSON: ") + e.what());
  }
}

std::string manifest_to_json(const ReleaseManifest& manifest) {
  ojson releases = ojson::array();
  for (const ReleaseWindow& w : manifest.releases) {
    releases.push_back({{"id", w.release_id},
                        {"inception", format_timestamp(w.inception)},
                        {"ending", format_timestamp(w.ending)}});
  }
  ojson doc;
  doc["releases"] = std::move(releases);
  return dump(doc);
}

std::string issues_to_jsonl(std::span<const IssueRecord> issues) {
  std::string out;
  for (const IssueRecord& i : issues) {
    ojson line;
    line["id"] = i.id;
    line["type"] = i.type.name();
    line["created"] = format_timestamp(i.created);
    line["resolved"] = i.resolved ? ojson(format_timestamp(*i.resolved)) : ojson(nullptr);
    line["resolution"] = i.resolution.empty() ? ojson(nullptr) : ojson(i.resolution);
    line["status"] = i.status;
    line["parent"] = i.parent_id ? ojson(*i.parent_id) : ojson(nullptr);
    out += line.dump() + "\n";
  }
  return out;
}

std::string commits_to_jsonl(std::span<const CommitRecord> commits) {
  std::string out;
  for (const CommitRecord& c : commits) {
    ojson line;
    line["hash"] = c.hash;
    line["timestamp"] = format_timestamp(c.timestamp);
    line["message"] = c.message;
    out += line.dump() + "\n";
  }
  return out;
}

std::string transition_matrix_to_json(const TransitionMatrix& tm) {
  ojson doc;
  doc["alphabet"] = state_list(tm.alphabet);
  ojson rates = ojson::array();
  ojson support = ojson::array();
  for (std::size_t i = 0; i < tm.alphabet.size(); ++i) {
    ojson rate_row = ojson::array();
    ojson support_row = ojson::array();
    for (std::size_t j = 0; j < tm.alphabet.size(); ++j) {
      rate_row.push_back(tm.rates(i, j));
      support_row.push_back(tm.support(i, j));
    }
    rates.push_back(std::move(rate_row));
    support.push_back(std::move(support_row));
  }
  doc["rates"] = std::move(rates);
  doc["support"] = std::move(support);
  return dump(doc);
}

std::string modal_trajectory_to_json(const ModalTrajectory& modal, std::string_view mode) {
  ojson doc;
  doc["mode"] = std::string(mode);
  ojson positions = ojson::array();
  for (std::size_t p = 0; p < modal.positions.size(); ++p) {
    const ModalPosition& m = modal.positions[p];
    positions.push_back({{"position", p},
                         {"state", render_state(m.state)},
                         {"frequency", m.frequency},
                         {"support", m.support},
                         {"denominator", m.denominator}});
  }
  doc["positions"] = std::move(positions);
  return dump(doc);
}

std::string dss_frequency_to_json(std::span<const DssFrequency> table) {
  ojson rows = ojson::array();
  for (const DssFrequency& row : table) {
    rows.push_back({{"pattern", state_list(row.pattern)},
                    {"count", row.count},
                    {"cumulative_ratio", row.cumulative_ratio}});
  }
  ojson doc;
  doc["patterns"] = std::move(rows);
  return dump(doc);
}

std::string scm_to_json(const SubstitutionCostMatrix& scm) {
  ojson doc;
  doc["alphabet"] = state_list(scm.alphabet());
  doc["indel"] = scm.indel();
  ojson costs = ojson::array();
  for (std::size_t i = 0; i < scm.alphabet().size(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < scm.alphabet().size(); ++j) row.push_back(scm.costs()(i, j));
    costs.push_back(std::move(row));
  }
  doc["costs"] = std::move(costs);
  return dump(doc);
}

std::string distance_matrix_to_csv(const DistanceMatrix& dm) {
  std::string out = "release_id";
  for (const std::string& id : dm.release_ids) out += "," + id;
  out += "\n";
  char buf[64];
  for (std::size_t i = 0; i < dm.size(); ++i) {
    out += dm.release_ids[i];
    for (std::size_t j = 0; j < dm.size(); ++j) {
      std::snprintf(buf, sizeof buf, ",%.6f", dm.distances(i, j));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string distance_matrix_to_json(const DistanceMatrix& dm) {
  ojson doc;
  doc["release_ids"] = dm.release_ids;
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < dm.size(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < dm.size(); ++j) row.push_back(dm.distances(i, j));
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  return dump(doc);
}

std::string clusters_to_csv(const ClusterAssignment& assignment) {
  std::string out = "release_id,cluster\n";
  for (std::size_t i = 0; i < assignment.release_ids.size(); ++i) {
    out += assignment.release_ids[i] + "," + std::to_string(assignment.labels[i]) + "\n";
  }
  return out;
}

std::string patterns_to_json(std::span<const PatternReport> patterns, std::size_t min_size,
                             std::size_t total_releases) {
  std::size_t covered = 0;
  ojson list = ojson::array();
  for (const PatternReport& p : patterns) {
    covered += p.members.size();
    ojson lengths = ojson::object();
    for (const auto& [len, n] : p.length_distribution) lengths[std::to_string(len)] = n;
    list.push_back({{"rank", p.rank},
                    {"cluster", p.cluster},
                    {"size", p.members.size()},
                    {"members", p.members},
                    {"medoid", p.medoid},
                    {"medoid_dss", state_list(p.medoid_dss)},
                    {"modal_dss", state_list(p.modal_dss)},
                    {"length_distribution", std::move(lengths)},
                    {"first_states", state_histogram(p.first_states)},
                    {"last_states", state_histogram(p.last_states)}});
  }
  ojson doc;
  doc["min_size"] = min_size;
  doc["selection"] = "clusters with at least min_size members (size filter, not a significance test)";
  doc["total_releases"] = total_releases;
  doc["covered_releases"] = covered;
  doc["patterns"] = std::move(list);
  return dump(doc);
}

}  // namespace rtk
