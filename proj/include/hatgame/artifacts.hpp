#pragma once

// Artifact files. Structured records are JSON tagged with a schema version;
// tables are CSV. Real numbers are written with 15 significant digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "hatgame/patterns.hpp"
#include "hatgame/strategy.hpp"

namespace hatgame {

inline constexpr const char* kSchema = "hatgame/1";

struct SetList {
  std::vector<AdequateSet> sets;
  // Optional probability vectors; each set then carries one phi per vector.
  std::vector<ProbabilityVector> probs;
};

void write_set_list(std::ostream& out, const SetList& list);
SetList read_set_list(std::istream& in);

// index column then one column per slot, header "index,00,01,...".
void write_pattern_table(std::ostream& out, const std::vector<Pattern>& patterns);
std::vector<Pattern> read_pattern_table(std::istream& in, int num_players, int num_colors);

void write_decision_matrix(std::ostream& out, const DecisionMatrix& matrix);
DecisionMatrix read_decision_matrix(std::istream& in);

// Rows are players 1..N, columns observed scores as N-1 base-Q digits,
// tab-separated, blank cell = pass.
std::string render_matrix_grid(const DecisionMatrix& matrix);

void write_solution(std::ostream& out, const Solution& solution);
Solution read_solution(std::istream& in);

void write_region_map(std::ostream& out, const std::vector<RegionMapRow>& rows);

// Player-order digits of an observed score, e.g. "12".
std::string score_label(const GameShape& shape, Code observed);

}  // namespace hatgame
