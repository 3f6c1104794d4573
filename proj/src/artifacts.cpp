#include "hatgame/artifacts.hpp"

#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hatgame/errors.hpp"

namespace hatgame {

using nlohmann::json;

namespace {

double rounded(double value) { return std::stod(format_real(value)); }

json parse_json(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(column));
  }
}

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ParseError("field '" + path + "': " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string join(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

long long as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<long long>();
}

double as_real(const json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) field_error(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array");
  return j;
}

void check_header(const json& root, const std::string& kind) {
  if (as_string(member(root, "schema", ""), "schema") != kSchema) {
    field_error("schema", std::string("expected '") + kSchema + "'");
  }
  if (as_string(member(root, "kind", ""), "kind") != kind) {
    field_error("kind", "expected '" + kind + "'");
  }
}

json shape_json(const GameShape& shape) {
  return {{"players", shape.num_players()}, {"colors", shape.num_colors()}};
}

template <typename Fn>
auto guarded(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    field_error(path, e.what());
  } catch (const CapacityError& e) {
    field_error(path, e.what());
  }
}

GameShape read_shape(const json& j, const std::string& path) {
  const auto players = as_int(member(j, "players", path), join(path, "players"));
  const auto colors = as_int(member(j, "colors", path), join(path, "colors"));
  return guarded(path, [&] { return GameShape(static_cast<int>(players), static_cast<int>(colors)); });
}

std::vector<Code> read_codes(const json& j, const std::string& path) {
  std::vector<Code> codes;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const auto c = as_int(j[i], join(path, i));
    if (c < 0) field_error(join(path, i), "negative code");
    codes.push_back(static_cast<Code>(c));
  }
  return codes;
}

json probs_json(const ProbabilityVector& probs) {
  json values = json::array();
  for (double p : probs.values()) values.push_back(rounded(p));
  json out = {{"values", values}};
  if (probs.is_exact()) {
    json exact = json::array();
    for (const auto& p : probs.exact()) exact.push_back(format_rational(p));
    out["exact"] = exact;
  }
  return out;
}

ProbabilityVector read_probs(const json& j, const std::string& path) {
  if (j.is_object() && j.contains("exact")) {
    const std::string epath = join(path, "exact");
    std::vector<Rational> exact;
    for (std::size_t i = 0; i < as_array(j["exact"], epath).size(); ++i) {
      exact.push_back(guarded(join(epath, i),
                              [&] { return parse_rational(as_string(j["exact"][i], join(epath, i))); }));
    }
    return guarded(epath, [&] { return ProbabilityVector::from_rationals(std::move(exact)); });
  }
  const std::string vpath = join(path, "values");
  const json& values = as_array(member(j, "values", path), vpath);
  std::vector<double> probs;
  for (std::size_t i = 0; i < values.size(); ++i) probs.push_back(as_real(values[i], join(vpath, i)));
  return guarded(vpath, [&] { return ProbabilityVector::from_doubles(std::move(probs)); });
}

json cells_json(const DecisionMatrix& matrix) {
  json rows = json::array();
  for (int i = 0; i < matrix.shape().num_players(); ++i) {
    json row = json::array();
    for (Code s = 0; s < matrix.shape().num_scores(); ++s) row.push_back(matrix.at(i, s).raw());
    rows.push_back(row);
  }
  return rows;
}

DecisionMatrix read_cells(const json& j, const GameShape& shape, const std::string& path) {
  DecisionMatrix matrix(shape);
  if (as_array(j, path).size() != static_cast<std::size_t>(shape.num_players())) {
    field_error(path, "expected " + std::to_string(shape.num_players()) + " rows");
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rpath = join(path, i);
    if (as_array(j[i], rpath).size() != shape.num_scores()) {
      field_error(rpath, "expected " + std::to_string(shape.num_scores()) + " cells");
    }
    for (std::size_t s = 0; s < j[i].size(); ++s) {
      const auto v = as_int(j[i][s], join(rpath, s));
      if (v < -1 || v >= shape.num_colors()) field_error(join(rpath, s), "action out of range");
      matrix.set(static_cast<int>(i), static_cast<Code>(s),
                 v < 0 ? Action::pass() : Action::guess(static_cast<Color>(v)));
    }
  }
  return matrix;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string score_label(const GameShape& shape, Code observed) {
  std::string label;
  const auto q = static_cast<Code>(shape.num_colors());
  for (int k = shape.num_players() - 2; k >= 0; --k) {
    Code place = 1;
    for (int e = 0; e < k; ++e) place *= q;
    label += std::to_string((observed / place) % q);
  }
  return label;
}

void write_set_list(std::ostream& out, const SetList& list) {
  json header_probs = json::array();
  for (const auto& p : list.probs) header_probs.push_back(probs_json(p));
  out << "{\"schema\":\"" << kSchema << "\",\"kind\":\"adequate_sets\",\"count\":"
      << list.sets.size() << ",\"probs\":" << header_probs.dump() << ",\"sets\":[";
  for (std::size_t i = 0; i < list.sets.size(); ++i) {
    const AdequateSet& set = list.sets[i];
    json record = {{"shape", shape_json(set.shape())}, {"codes", set.codes()}};
    if (!list.probs.empty()) {
      json phis = json::array();
      for (const auto& p : list.probs) phis.push_back(rounded(phi(set, p)));
      record["phi"] = phis;
    }
    out << (i == 0 ? "\n" : ",\n") << record.dump();
  }
  out << "\n]}\n";
}

SetList read_set_list(std::istream& in) {
  const json root = parse_json(in);
  check_header(root, "adequate_sets");
  SetList list;
  const json& probs = as_array(member(root, "probs", ""), "probs");
  for (std::size_t i = 0; i < probs.size(); ++i) list.probs.push_back(read_probs(probs[i], join("probs", i)));
  const json& sets = as_array(member(root, "sets", ""), "sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string path = join("sets", i);
    const GameShape shape = read_shape(member(sets[i], "shape", path), join(path, "shape"));
    auto codes = read_codes(member(sets[i], "codes", path), join(path, "codes"));
    list.sets.push_back(guarded(join(path, "codes"), [&] { return AdequateSet(shape, std::move(codes)); }));
  }
  if (static_cast<std::size_t>(as_int(member(root, "count", ""), "count")) != list.sets.size()) {
    field_error("count", "does not match the number of records");
  }
  return list;
}

void write_pattern_table(std::ostream& out, const std::vector<Pattern>& patterns) {
  if (patterns.empty()) {
    out << "index\n";
    return;
  }
  out << "index";
  for (const auto& slot : signature_slots(patterns[0].num_players(), patterns[0].num_colors())) {
    out << ',' << slot_label(slot);
  }
  out << '\n';
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    out << i + 1;
    for (int c : patterns[i].coefficients()) out << ',' << c;
    out << '\n';
  }
}

std::vector<Pattern> read_pattern_table(std::istream& in, int num_players, int num_colors) {
  const auto slots = signature_slots(num_players, num_colors);
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("line 1: missing header");
  const auto header = split_csv(line);
  if (header.size() != slots.size() + 1 || header[0] != "index") {
    throw ParseError("line 1: header does not match the slot layout");
  }
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (header[s + 1] != slot_label(slots[s])) {
      throw ParseError("line 1, field " + std::to_string(s + 2) + ": expected slot " +
                       slot_label(slots[s]));
    }
  }
  std::vector<Pattern> patterns;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != slots.size() + 1) throw ParseError(where + ": wrong number of fields");
    std::vector<int> coeffs;
    for (std::size_t f = 1; f < fields.size(); ++f) {
      try {
        std::size_t used = 0;
        coeffs.push_back(std::stoi(fields[f], &used));
        if (used != fields[f].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(where + ", field " + std::to_string(f + 1) + ": not an integer");
      }
    }
    try {
      patterns.emplace_back(num_players, num_colors, std::move(coeffs));
    } catch (const InvalidInput& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return patterns;
}

void write_decision_matrix(std::ostream& out, const DecisionMatrix& matrix) {
  const json root = {{"schema", kSchema},
                     {"kind", "decision_matrix"},
                     {"shape", shape_json(matrix.shape())},
                     {"cells", cells_json(matrix)}};
  out << root.dump() << '\n';
}

DecisionMatrix read_decision_matrix(std::istream& in) {
  const json root = parse_json(in);
  check_header(root, "decision_matrix");
  const GameShape shape = read_shape(member(root, "shape", ""), "shape");
  return read_cells(member(root, "cells", ""), shape, "cells");
}

std::string render_matrix_grid(const DecisionMatrix& matrix) {
  const GameShape& shape = matrix.shape();
  std::string out;
  for (Code s = 0; s < shape.num_scores(); ++s) out += "\t" + score_label(shape, s);
  out += '\n';
  for (int i = 0; i < shape.num_players(); ++i) {
    out += std::to_string(i + 1);
    for (Code s = 0; s < shape.num_scores(); ++s) {
      out += '\t';
      const Action a = matrix.at(i, s);
      if (!a.is_pass()) out += std::to_string(a.color());
    }
    out += '\n';
  }
  return out;
}

void write_solution(std::ostream& out, const Solution& solution) {
  json root = {{"schema", kSchema},
               {"kind", "solution"},
               {"mode", to_string(solution.mode)},
               {"shape", shape_json(solution.shape)},
               {"probs", probs_json(solution.probs)},
               {"value", rounded(solution.value)}};
  if (solution.exact_value) root["value_exact"] = format_rational(*solution.exact_value);
  if (solution.classification) {
    const auto& c = *solution.classification;
    root["region"] = {{"label", std::string(1, region_letter(c.label.region))},
                      {"boundary", c.label.is_boundary},
                      {"tied", c.label.tied}};
  }
  json optimal = json::array();
  for (const auto& o : solution.optimal) {
    json entry = {{"codes", o.set.codes()}, {"phi", rounded(o.phi)}, {"matrix", cells_json(o.matrix)}};
    if (o.exact_phi) entry["phi_exact"] = format_rational(*o.exact_phi);
    optimal.push_back(entry);
  }
  root["optimal"] = optimal;
  out << root.dump(1) << '\n';
}

Solution read_solution(std::istream& in) {
  const json root = parse_json(in);
  check_header(root, "solution");
  const SolveMode mode =
      guarded("mode", [&] { return parse_solve_mode(as_string(member(root, "mode", ""), "mode")); });
  const GameShape shape = read_shape(member(root, "shape", ""), "shape");
  ProbabilityVector probs = read_probs(member(root, "probs", ""), "probs");
  if (probs.size() != static_cast<std::size_t>(shape.num_colors())) {
    field_error("probs", "wrong number of entries for the shape");
  }
  Solution sol{mode, shape, probs, as_real(member(root, "value", ""), "value"), std::nullopt,
               std::nullopt, {}};
  if (root.contains("value_exact")) {
    sol.exact_value = guarded("value_exact", [&] {
      return parse_rational(as_string(root["value_exact"], "value_exact"));
    });
  }
  if (root.contains("region")) {
    const json& region = root["region"];
    sol.classification = guarded("region", [&] { return classify(probs); });
    const std::string label = as_string(member(region, "label", "region"), "region.label");
    if (label != std::string(1, region_letter(sol.classification->label.region))) {
      field_error("region.label", "inconsistent with the probabilities");
    }
  }
  const json& optimal = as_array(member(root, "optimal", ""), "optimal");
  for (std::size_t i = 0; i < optimal.size(); ++i) {
    const std::string path = join("optimal", i);
    auto codes = read_codes(member(optimal[i], "codes", path), join(path, "codes"));
    AdequateSet set = guarded(join(path, "codes"), [&] { return AdequateSet(shape, std::move(codes)); });
    const double set_phi = as_real(member(optimal[i], "phi", path), join(path, "phi"));
    std::optional<Rational> exact_phi;
    if (optimal[i].contains("phi_exact")) {
      const std::string epath = join(path, "phi_exact");
      exact_phi = guarded(epath, [&] { return parse_rational(as_string(optimal[i]["phi_exact"], epath)); });
    }
    DecisionMatrix matrix = read_cells(member(optimal[i], "matrix", path), shape, join(path, "matrix"));
    sol.optimal.push_back({std::move(set), set_phi, exact_phi, std::move(matrix)});
  }
  return sol;
}

void write_region_map(std::ostream& out, const std::vector<RegionMapRow>& rows) {
  out << "p,r,label,psi\n";
  for (const auto& row : rows) {
    out << format_real(row.p) << ',' << format_real(row.r) << ',' << region_letter(row.region)
        << ',' << format_real(row.value) << '\n';
  }
}

}  // namespace hatgame
