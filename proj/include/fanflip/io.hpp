#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fanflip/fan.hpp"
#include "fanflip/moves.hpp"
#include "fanflip/recognition.hpp"

namespace fanflip {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// The on-disk complex document: facets, an optional antipodal flag and
/// optional integer labels. Canonical form has facets sorted, vertices
/// ascending inside each facet, and labels sorted by vertex.
struct ComplexFile {
  int format = kFormatVersion;
  std::vector<Simplex> facets;
  bool z2 = false;
  std::optional<std::map<Vertex, long long>> labels;

  bool operator==(const ComplexFile&) const = default;

  SimplicialComplex complex() const { return SimplicialComplex::from_facets(facets); }
  Z2Complex z2_complex() const { return make_signed(complex()); }
  std::optional<FanLabelling> labelling() const {
    if (!labels) return std::nullopt;
    return FanLabelling::from_integers(*labels);
  }
};

inline ComplexFile to_file(const SimplicialComplex& k) { return ComplexFile{kFormatVersion, k.facets(), false, std::nullopt}; }

inline ComplexFile to_file(const Z2Complex& m, const std::optional<FanLabelling>& lambda = std::nullopt) {
  ComplexFile f{kFormatVersion, m.facets(), true, std::nullopt};
  if (lambda) f.labels = lambda->to_integers();
  return f;
}

namespace detail {

inline bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

// Like Json::dump(2), except arrays of scalars stay on one line.
inline void write_json(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      write_json(out, it.value(), indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      write_json(out, j[i], indent + 2);
    }
    out += "\n" + pad + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += j[i].dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

inline Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

inline Json to_json(const Simplex& s) { return Json(s.vertices()); }

inline Simplex simplex_from_json(const Json& j, std::string_view field) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(field) + " must be a list of integers");
  std::vector<Vertex> vs;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(field) + " must be a list of integers");
    const auto v = x.get<long long>();
    if (v == 0 || v != static_cast<Vertex>(v))
      throw Error(ErrorCode::InvalidVertexId, std::string(field) + " contains vertex id " + std::to_string(v));
    vs.push_back(static_cast<Vertex>(v));
  }
  return Simplex(std::move(vs));
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

inline std::uint64_t parse_hex64(const Json& j, std::string_view field) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, std::string(field) + " must be a hex string");
  try {
    return std::stoull(j.get<std::string>(), nullptr, 16);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string(field) + " must be a hex string");
  }
}

}  // namespace detail

inline std::string dump(const Json& j) {
  std::string out;
  detail::write_json(out, j, 0);
  return out + "\n";
}

inline Json to_json(const ComplexFile& f) {
  Json j;
  j["format"] = f.format;
  j["z2"] = f.z2;
  Json facets = Json::array();
  for (const auto& s : f.facets) facets.push_back(detail::to_json(s));
  j["facets"] = std::move(facets);
  if (f.labels) {
    Json labels = Json::array();
    for (auto [v, x] : *f.labels) labels.push_back(Json::array({v, x}));
    j["labels"] = std::move(labels);
  }
  return j;
}

inline std::string serialize(const ComplexFile& f) {
  ComplexFile canonical = f;
  std::sort(canonical.facets.begin(), canonical.facets.end());
  return dump(to_json(canonical));
}

/// Parses a complex document. "labels" may be a list of [vertex, label]
/// pairs (canonical) or an object keyed by vertex id.
inline ComplexFile parse_complex_file(std::string_view text) {
  const Json j = detail::parse_json(text, "complex file");
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "complex file must be a JSON object");
  ComplexFile f;
  if (j.contains("format")) {
    if (!j["format"].is_number_integer()) throw Error(ErrorCode::ParseError, "\"format\" must be an integer");
    f.format = j["format"].get<int>();
    if (f.format != kFormatVersion)
      throw Error(ErrorCode::ParseError, "unsupported format version " + std::to_string(f.format));
  }
  if (!j.contains("facets") || !j["facets"].is_array())
    throw Error(ErrorCode::ParseError, "missing list \"facets\"");
  for (const auto& facet : j["facets"]) f.facets.push_back(detail::simplex_from_json(facet, "facet"));
  std::sort(f.facets.begin(), f.facets.end());
  if (j.contains("z2")) {
    if (!j["z2"].is_boolean()) throw Error(ErrorCode::ParseError, "\"z2\" must be a boolean");
    f.z2 = j["z2"].get<bool>();
  }
  if (j.contains("labels")) {
    std::map<Vertex, long long> labels;
    const auto& l = j["labels"];
    auto add = [&](long long v, const Json& x) {
      if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "labels must be integers");
      if (v == 0 || v != static_cast<Vertex>(v)) throw Error(ErrorCode::InvalidVertexId, "label for vertex id " + std::to_string(v));
      labels[static_cast<Vertex>(v)] = x.get<long long>();
    };
    if (l.is_array()) {
      for (const auto& pair : l) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
          throw Error(ErrorCode::ParseError, "labels must be [vertex, label] pairs");
        add(pair[0].get<long long>(), pair[1]);
      }
    } else if (l.is_object()) {
      for (auto it = l.begin(); it != l.end(); ++it) {
        long long v = 0;
        try {
          std::size_t used = 0;
          v = std::stoll(it.key(), &used);
          if (used != it.key().size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "label key \"" + it.key() + "\" is not a vertex id");
        }
        add(v, it.value());
      }
    } else {
      throw Error(ErrorCode::ParseError, "\"labels\" must be a list of pairs or an object");
    }
    f.labels = std::move(labels);
  }
  return f;
}

inline Json to_json(const BistellarMove& m, SequenceKind kind) {
  Json j;
  j["A"] = detail::to_json(m.removed);
  j["B"] = detail::to_json(m.inserted);
  Json fresh = Json::array();
  if (m.inserted.size() == 1) {
    fresh.push_back(m.inserted.front());
    if (kind == SequenceKind::z2) fresh.push_back(-m.inserted.front());
  }
  j["fresh"] = std::move(fresh);
  return j;
}

inline Json to_json(const FlipSequence& seq) {
  Json j;
  j["format"] = kFormatVersion;
  j["kind"] = seq.kind == SequenceKind::z2 ? "z2" : "plain";
  j["source_digest"] = detail::hex64(seq.source_digest);
  j["target_digest"] = detail::hex64(seq.target_digest);
  Json moves = Json::array();
  for (const auto& m : seq.moves) moves.push_back(to_json(m, seq.kind));
  j["moves"] = std::move(moves);
  return j;
}

inline FlipSequence flip_sequence_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "flip sequence must be a JSON object");
  FlipSequence seq;
  const std::string kind = j.value("kind", std::string("plain"));
  if (kind != "plain" && kind != "z2") throw Error(ErrorCode::ParseError, "unknown sequence kind \"" + kind + "\"");
  seq.kind = kind == "z2" ? SequenceKind::z2 : SequenceKind::plain;
  if (j.contains("source_digest")) seq.source_digest = detail::parse_hex64(j["source_digest"], "source_digest");
  if (j.contains("target_digest")) seq.target_digest = detail::parse_hex64(j["target_digest"], "target_digest");
  if (!j.contains("moves") || !j["moves"].is_array()) throw Error(ErrorCode::ParseError, "missing list \"moves\"");
  for (const auto& m : j["moves"]) {
    if (!m.is_object() || !m.contains("A") || !m.contains("B"))
      throw Error(ErrorCode::ParseError, "each move needs \"A\" and \"B\"");
    BistellarMove mv{detail::simplex_from_json(m["A"], "A"), detail::simplex_from_json(m["B"], "B")};
    if (m.contains("fresh") && to_json(mv, seq.kind)["fresh"] != m["fresh"])
      throw Error(ErrorCode::ParseError, "\"fresh\" does not match B in move " + to_string(mv));
    seq.moves.push_back(std::move(mv));
  }
  return seq;
}

inline FlipSequence parse_flip_sequence(std::string_view text) {
  return flip_sequence_from_json(detail::parse_json(text, "flip sequence"));
}

inline Json to_json(const FVector& f) { return Json(f.counts); }

inline Json to_json(const ReductionReport& r) {
  Json j;
  j["outcome"] = std::string(to_string(r.outcome));
  j["budget"] = r.config.budget;
  j["seed"] = r.config.seed;
  j["flips_tried"] = r.stats.flips_tried;
  j["flips_accepted"] = r.stats.flips_accepted;
  j["restarts"] = r.stats.restarts;
  j["best_f_vector"] = to_json(r.stats.best_f_vector);
  j["final_f_vector"] = to_json(r.final_complex.f_vector());
  j["sequence"] = to_json(r.sequence);
  return j;
}

inline std::string_view to_string(RelabelRule rule) {
  switch (rule) {
    case RelabelRule::fresh_vertex: return "fresh_vertex";
    case RelabelRule::perturbed_edge: return "perturbed_edge";
    case RelabelRule::unchanged: return "unchanged";
  }
  return "unchanged";
}

inline Json labels_to_json(const FanLabelling& lambda) {
  Json labels = Json::array();
  for (auto [v, x] : lambda.to_integers()) labels.push_back(Json::array({v, x}));
  return labels;
}

/// Certificate document: per-step trace with the parity of the positive
/// alternating count, the flip sequence for independent replay, and the final
/// labelling.
inline Json to_json(const FanCertificate& c) {
  Json j;
  j["format"] = kFormatVersion;
  j["verified"] = c.verified();
  j["alpha_plus"] = c.alpha_plus;
  j["parity_constant"] = c.parity_constant();
  Json trace = Json::array();
  for (const auto& e : c.trace) {
    Json t;
    t["step"] = e.step;
    t["move"] = e.move ? to_json(*e.move, SequenceKind::z2) : Json(nullptr);
    t["rule"] = std::string(to_string(e.rule));
    t["alpha_plus"] = e.alpha.plus;
    t["alpha_minus"] = e.alpha.minus;
    t["alpha_plus_mod2"] = e.parity();
    trace.push_back(std::move(t));
  }
  j["trace"] = std::move(trace);
  j["final_labels"] = labels_to_json(c.final_labelling);
  Json facets = Json::array();
  for (const auto& f : c.final_complex.facets()) facets.push_back(detail::to_json(f));
  j["final_facets"] = std::move(facets);
  j["reduction"] = to_json(c.reduction);
  return j;
}

}  // namespace fanflip
