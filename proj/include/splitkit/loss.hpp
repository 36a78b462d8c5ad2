#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitkit/types.hpp"

namespace splitkit {

// Per-position probability rows over a shared vocabulary, as produced by an
// external model teacher-forced on the delta-mixed history.
struct ProbMatrix {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> vocab;

  // Throws std::invalid_argument unless every row has |vocab| entries
  // summing to 1 within tol.
  void validate(double tol = 1e-6) const;
  std::size_t vocab_index(const std::string& token) const;  // throws on miss
};

struct ClassProbs {
  std::array<double, 3> probs{};  // indexed by SplitCategory order

  void validate(double tol = 1e-6) const;
  double prob(SplitCategory c) const { return probs[static_cast<std::size_t>(c)]; }
};

// Mean negative log-probability of the delta-selected target: x_padded[i]
// where delta_i = 0, y_padded[i] where delta_i = 1.
double seq_loss(const EditAlignment& alignment, const ProbMatrix& probs);

// seq + weight * (-log P(gold category)). A zero gold probability yields
// +infinity.
double joint_loss(double seq, const ClassProbs& cls, SplitCategory gold, double weight = 1.0);

// The teacher-forcing history: x_padded where delta_i = 0, y_padded where 1.
std::vector<std::string> mix_history(const EditAlignment& alignment);

// Text container for externally supplied matrices, keyed by record id:
//   record <id>
//   vocab <V> tok_1 ... tok_V
//   rows <N>
//   <N lines of V probabilities>
//   class <p_direct> <p_near> <p_across>     (optional)
struct LossInputs {
  ProbMatrix matrix;
  std::optional<ClassProbs> class_probs;
};
std::map<std::string, LossInputs> read_prob_file(const std::string& path);
std::map<std::string, LossInputs> read_prob_stream(std::istream& in,
                                                   const std::string& name = "<stream>");
void write_prob_file(const std::map<std::string, LossInputs>& inputs, const std::string& path);

}  // namespace splitkit
