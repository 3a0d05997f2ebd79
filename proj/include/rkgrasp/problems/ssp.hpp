#pragma once

#include <span>
#include <string>
#include <vector>

#include "rkgrasp/decoder.hpp"

namespace rkgrasp {

/// Job sequencing and tool switching instance.
class SspInstance {
 public:
  using ToolMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

  /// needs(t, u) = 1 when job t needs tool u. Throws std::invalid_argument
  /// on non-binary entries or a job needing more than `capacity` tools.
  SspInstance(ToolMatrix needs, int capacity, std::string name = {});

  int jobs() const { return static_cast<int>(needs_.rows()); }
  int tools() const { return static_cast<int>(needs_.cols()); }
  int capacity() const { return capacity_; }
  const std::string& name() const { return name_; }
  const ToolMatrix& matrix() const { return needs_; }
  const std::vector<int>& tools_of(int job) const { return tools_of_[job]; }

  friend bool operator==(const SspInstance& a, const SspInstance& b) {
    return a.capacity_ == b.capacity_ && a.needs_ == b.needs_;
  }

 private:
  ToolMatrix needs_;
  int capacity_;
  std::string name_;
  std::vector<std::vector<int>> tools_of_;
};

/// Keep Tool Needed Soonest: missing tools fill free slots at no cost; once
/// the magazine is full each insertion is one switch and evicts the unneeded
/// tool whose next use is farthest away (ties: higher tool index).
int ktns_switches(std::span<const int> sequence, const SspInstance& inst);

struct SspSequence {
  int cost = 0;
  std::vector<int> jobs;
};

/// Jobs in ascending key order, priced with ktns_switches.
SspSequence decode_ssp(const RandomKeys& x, const SspInstance& inst);

class SspDecoder final : public Decoder {
 public:
  explicit SspDecoder(SspInstance inst) : inst_(std::move(inst)) {}

  int dimension() const override { return inst_.jobs(); }
  double cost(const RandomKeys& x) const override { return decode_ssp(x, inst_).cost; }
  DecodedSolution decode(const RandomKeys& x) const override;
  std::string_view problem() const override { return "ssp"; }
  int natural_size() const override { return inst_.jobs(); }
  const SspInstance& instance() const { return inst_; }

 private:
  SspInstance inst_;
};

}  // namespace rkgrasp
