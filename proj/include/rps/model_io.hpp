#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rps/distributions.hpp"
#include "rps/errors.hpp"
#include "rps/event.hpp"
#include "rps/frame.hpp"
#include "rps/mass_function.hpp"

namespace rps {

enum class model_kind { pm, bpa, probability };

inline const char* to_string(model_kind kind) {
  switch (kind) {
    case model_kind::pm: return "pm";
    case model_kind::bpa: return "bpa";
    case model_kind::probability: return "probability";
  }
  return "?";
}

/// Parsed form of a model file: a frame roster plus (event labels, mass)
/// pairs. Events are written as ordered label arrays, so permutation order
/// is explicit in the wire format; for bpa and probability kinds the order
/// carries no meaning.
struct model_file {
  model_kind kind = model_kind::pm;
  std::vector<std::string> frame_labels;
  std::vector<std::pair<std::vector<std::string>, double>> masses;
};

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& object,
                                  const std::vector<std::string>& allowed,
                                  const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const auto& name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw parse_error(where + ": unknown field '" + key + "'");
    }
  }
}

inline const nlohmann::json& require_field(const nlohmann::json& object,
                                           const std::string& name,
                                           const std::string& where) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw parse_error(where + ": missing field '" + name + "'");
  }
  return *it;
}

}  // namespace detail

inline model_file parse_model_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw parse_error("model file: top level must be an object");
  }
  detail::reject_unknown_fields(doc, {"kind", "frame", "masses"}, "model file");

  model_file out;
  const auto& kind = detail::require_field(doc, "kind", "model file");
  if (!kind.is_string()) {
    throw parse_error("model file: 'kind' must be a string");
  }
  const std::string kind_text = kind.get<std::string>();
  if (kind_text == "pm") {
    out.kind = model_kind::pm;
  } else if (kind_text == "bpa") {
    out.kind = model_kind::bpa;
  } else if (kind_text == "probability") {
    out.kind = model_kind::probability;
  } else {
    throw parse_error("model file: unknown kind '" + kind_text +
                      "' (expected pm, bpa or probability)");
  }

  const auto& frame_field = detail::require_field(doc, "frame", "model file");
  if (!frame_field.is_array() || frame_field.empty()) {
    throw parse_error("model file: 'frame' must be a nonempty array of labels");
  }
  for (const auto& label : frame_field) {
    if (!label.is_string()) {
      throw parse_error("model file: frame labels must be strings");
    }
    out.frame_labels.push_back(label.get<std::string>());
  }

  const auto& masses = detail::require_field(doc, "masses", "model file");
  if (!masses.is_array()) {
    throw parse_error("model file: 'masses' must be an array");
  }
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string where = "masses[" + std::to_string(i) + "]";
    const auto& entry = masses[i];
    if (!entry.is_object()) {
      throw parse_error(where + ": must be an object with 'event' and 'mass'");
    }
    detail::reject_unknown_fields(entry, {"event", "mass"}, where);
    const auto& event = detail::require_field(entry, "event", where);
    if (!event.is_array()) {
      throw parse_error(where + ".event: must be an array of labels");
    }
    std::vector<std::string> labels;
    for (const auto& label : event) {
      if (!label.is_string()) {
        throw parse_error(where + ".event: labels must be strings");
      }
      labels.push_back(label.get<std::string>());
    }
    const auto& mass = detail::require_field(entry, "mass", where);
    if (!mass.is_number()) {
      throw parse_error(where + ".mass: must be a number");
    }
    out.masses.emplace_back(std::move(labels), mass.get<double>());
  }
  return out;
}

inline model_file load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot open model file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model_file(buffer.str());
}

namespace detail {

inline int resolve_label(const frame& f, const std::string& label, std::size_t entry) {
  try {
    return f.index_of(label);
  } catch (const domain_error&) {
    throw parse_error("masses[" + std::to_string(entry) + "].event: label '" + label +
                      "' is not in the frame");
  }
}

}  // namespace detail

inline permutation_mass_function to_pm(const model_file& mf, bool renormalize = false) {
  if (mf.kind != model_kind::pm) {
    throw parse_error(std::string("model file has kind '") + to_string(mf.kind) +
                      "', expected 'pm'");
  }
  const frame f(mf.frame_labels);
  std::vector<std::pair<permutation_event, double>> pairs;
  pairs.reserve(mf.masses.size());
  for (std::size_t i = 0; i < mf.masses.size(); ++i) {
    std::vector<int> indices;
    indices.reserve(mf.masses[i].first.size());
    for (const auto& label : mf.masses[i].first) {
      indices.push_back(detail::resolve_label(f, label, i));
    }
    pairs.emplace_back(permutation_event(std::move(indices)), mf.masses[i].second);
  }
  return pm_from_assignments(f, pairs, renormalize);
}

inline basic_probability_assignment to_bpa(const model_file& mf, bool renormalize = false) {
  if (mf.kind != model_kind::bpa) {
    throw parse_error(std::string("model file has kind '") + to_string(mf.kind) +
                      "', expected 'bpa'");
  }
  const frame f(mf.frame_labels);
  std::vector<std::pair<basic_probability_assignment::subset, double>> pairs;
  pairs.reserve(mf.masses.size());
  for (std::size_t i = 0; i < mf.masses.size(); ++i) {
    basic_probability_assignment::subset s;
    s.reserve(mf.masses[i].first.size());
    for (const auto& label : mf.masses[i].first) {
      s.push_back(detail::resolve_label(f, label, i));
    }
    pairs.emplace_back(std::move(s), mf.masses[i].second);
  }
  return bpa_from_assignments(f, pairs, renormalize);
}

inline probability_distribution to_probability(const model_file& mf,
                                               bool renormalize = false) {
  if (mf.kind != model_kind::probability) {
    throw parse_error(std::string("model file has kind '") + to_string(mf.kind) +
                      "', expected 'probability'");
  }
  const frame f(mf.frame_labels);  // reuses the distinct-label validation
  std::vector<double> probs(mf.frame_labels.size(), 0.0);
  std::vector<bool> seen(mf.frame_labels.size(), false);
  for (std::size_t i = 0; i < mf.masses.size(); ++i) {
    if (mf.masses[i].first.size() != 1) {
      throw parse_error("masses[" + std::to_string(i) +
                        "].event: a probability entry names exactly one outcome");
    }
    const int ix = detail::resolve_label(f, mf.masses[i].first.front(), i);
    if (seen[static_cast<std::size_t>(ix)]) {
      throw validation_error("duplicate outcome '" + mf.masses[i].first.front() +
                             "' in probability masses");
    }
    seen[static_cast<std::size_t>(ix)] = true;
    probs[static_cast<std::size_t>(ix)] = mf.masses[i].second;
  }
  return probability_distribution(mf.frame_labels, std::move(probs), renormalize);
}

inline nlohmann::json to_model_json(const permutation_mass_function& pm) {
  nlohmann::json doc;
  doc["kind"] = "pm";
  doc["frame"] = pm.base_frame().labels();
  auto& masses = doc["masses"] = nlohmann::json::array();
  for (const auto& [event, mass] : pm.masses()) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(event.cardinality()));
    for (int ix : event.indices()) labels.push_back(pm.base_frame().label(ix));
    masses.push_back({{"event", labels}, {"mass", mass}});
  }
  return doc;
}

inline nlohmann::json to_model_json(const basic_probability_assignment& bpa) {
  nlohmann::json doc;
  doc["kind"] = "bpa";
  doc["frame"] = bpa.base_frame().labels();
  auto& masses = doc["masses"] = nlohmann::json::array();
  for (const auto& [s, mass] : bpa.masses()) {
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (int ix : s) labels.push_back(bpa.base_frame().label(ix));
    masses.push_back({{"event", labels}, {"mass", mass}});
  }
  return doc;
}

inline nlohmann::json to_model_json(const probability_distribution& p) {
  nlohmann::json doc;
  doc["kind"] = "probability";
  doc["frame"] = p.labels();
  auto& masses = doc["masses"] = nlohmann::json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.probs()[i] == 0.0) continue;
    masses.push_back({{"event", std::vector<std::string>{p.labels()[i]}},
                      {"mass", p.probs()[i]}});
  }
  return doc;
}

}  // namespace rps
