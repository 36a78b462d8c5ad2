#include "splitkit/loss.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace splitkit {

void ProbMatrix::validate(double tol) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != vocab.size()) {
      throw std::invalid_argument("prob row " + std::to_string(i) +
                                  " does not match vocab size");
    }
    double sum = 0.0;
    for (double p : rows[i]) {
      if (p < 0.0) throw std::invalid_argument("negative probability in row " + std::to_string(i));
      sum += p;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw std::invalid_argument("prob row " + std::to_string(i) + " sums to " +
                                  std::to_string(sum));
    }
  }
}

std::size_t ProbMatrix::vocab_index(const std::string& token) const {
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (vocab[i] == token) return i;
  }
  throw std::out_of_range("token not in vocab: " + token);
}

void ClassProbs::validate(double tol) const {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("negative class probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw std::invalid_argument("class probabilities sum to " + std::to_string(sum));
  }
}

double seq_loss(const EditAlignment& alignment, const ProbMatrix& probs) {
  const std::size_t n = alignment.delta.size();
  if (n == 0) throw std::invalid_argument("seq_loss: empty alignment");
  if (alignment.x_padded.size() != n || alignment.y_padded.size() != n) {
    throw std::invalid_argument("seq_loss: alignment length mismatch");
  }
  if (probs.rows.size() != n) {
    throw std::invalid_argument("seq_loss: prob rows do not match positions");
  }
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(probs.vocab.size());
  for (std::size_t i = 0; i < probs.vocab.size(); ++i) index.emplace(probs.vocab[i], i);

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& target = alignment.delta[i] ? alignment.y_padded[i]
                                                   : alignment.x_padded[i];
    auto it = index.find(target);
    if (it == index.end()) throw std::out_of_range("seq_loss: token not in vocab: " + target);
    const double p = probs.rows[i][it->second];
    if (p <= 0.0) return std::numeric_limits<double>::infinity();
    total += -std::log(p);
  }
  return total / static_cast<double>(n);
}

double joint_loss(double seq, const ClassProbs& cls, SplitCategory gold, double weight) {
  if (weight < 0.0) throw std::invalid_argument("joint_loss: negative weight");
  if (weight == 0.0) return seq;
  const double p = cls.prob(gold);
  if (p <= 0.0) return std::numeric_limits<double>::infinity();
  return seq + weight * -std::log(p);
}

std::vector<std::string> mix_history(const EditAlignment& alignment) {
  const std::size_t n = alignment.delta.size();
  if (alignment.x_padded.size() != n || alignment.y_padded.size() != n) {
    throw std::invalid_argument("mix_history: alignment length mismatch");
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(alignment.delta[i] ? alignment.y_padded[i] : alignment.x_padded[i]);
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line_no, const std::string& msg) {
  throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + msg);
}

}  // namespace

std::map<std::string, LossInputs> read_prob_stream(std::istream& in, const std::string& name) {
  std::map<std::string, LossInputs> out;
  std::string line;
  std::size_t line_no = 0;
  std::string cur_id;
  LossInputs cur;
  std::size_t expect_rows = 0;

  auto flush = [&]() {
    if (cur_id.empty()) return;
    if (cur.matrix.rows.size() != expect_rows) {
      throw std::runtime_error(name + ": record " + cur_id + " declares " +
                               std::to_string(expect_rows) + " rows but has " +
                               std::to_string(cur.matrix.rows.size()));
    }
    cur.matrix.validate();
    if (cur.class_probs) cur.class_probs->validate();
    out[cur_id] = std::move(cur);
    cur = LossInputs{};
    cur_id.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "record") {
      flush();
      if (!(ss >> cur_id)) fail(name, line_no, "record line without id");
      expect_rows = 0;
    } else if (head == "vocab") {
      std::size_t v = 0;
      if (!(ss >> v)) fail(name, line_no, "vocab line without size");
      std::string tok;
      while (ss >> tok) cur.matrix.vocab.push_back(tok);
      if (cur.matrix.vocab.size() != v) fail(name, line_no, "vocab size mismatch");
    } else if (head == "rows") {
      if (!(ss >> expect_rows)) fail(name, line_no, "rows line without count");
    } else if (head == "class") {
      ClassProbs cls;
      if (!(ss >> cls.probs[0] >> cls.probs[1] >> cls.probs[2])) {
        fail(name, line_no, "class line needs three probabilities");
      }
      cur.class_probs = cls;
    } else {
      if (cur_id.empty()) fail(name, line_no, "probability row outside a record block");
      std::vector<double> row;
      row.reserve(cur.matrix.vocab.size());
      std::istringstream row_ss(line);
      double p;
      while (row_ss >> p) row.push_back(p);
      if (row.empty()) fail(name, line_no, "unparseable probability row");
      cur.matrix.rows.push_back(std::move(row));
    }
  }
  flush();
  return out;
}

std::map<std::string, LossInputs> read_prob_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open probability file: " + path);
  return read_prob_stream(in, path);
}

void write_prob_file(const std::map<std::string, LossInputs>& inputs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.precision(17);
  for (const auto& [id, li] : inputs) {
    out << "record " << id << '\n';
    out << "vocab " << li.matrix.vocab.size();
    for (const auto& tok : li.matrix.vocab) out << ' ' << tok;
    out << '\n';
    out << "rows " << li.matrix.rows.size() << '\n';
    for (const auto& row : li.matrix.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << '\n';
    }
    if (li.class_probs) {
      out << "class " << li.class_probs->probs[0] << ' ' << li.class_probs->probs[1] << ' '
          << li.class_probs->probs[2] << '\n';
    }
  }
}

}  // namespace splitkit
