#include "ellhyp/partition.hpp"

#include <numeric>
#include <sstream>

#include "ellhyp/error.hpp"

namespace ellhyp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::InvalidArgument, "partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative part in " + to_string());
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error(ErrorKind::InvalidArgument, "parts not weakly decreasing in " + to_string());
  }
}

Partition Partition::rectangle(int nparts, int value) {
  return Partition(std::vector<int>(static_cast<std::size_t>(nparts), value));
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::weighted_size() const noexcept {
  int total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) total += static_cast<int>(i) * parts_[i];
  return total;
}

int Partition::multiplicity(int value) const noexcept {
  int count = 0;
  for (int part : parts_) count += part == value ? 1 : 0;
  return count;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

void for_each_partition(int nparts, int cap, const std::function<void(const Partition&)>& visit) {
  if (nparts < 1 || nparts > 6) throw Error(ErrorKind::InvalidArgument, "nparts must lie in [1,6]");
  if (cap < 0 || cap > 8) throw Error(ErrorKind::InvalidArgument, "cap must lie in [0,8]");

  // Odometer over weakly decreasing vectors: bump the rightmost part that is
  // still below its left neighbour (or below cap for the first part), then
  // reset everything to its right to zero.
  std::vector<int> parts(static_cast<std::size_t>(nparts), 0);
  while (true) {
    visit(Partition(parts));
    int pos = nparts - 1;
    while (pos >= 0) {
      const int bound = pos == 0 ? cap : parts[static_cast<std::size_t>(pos) - 1];
      if (parts[static_cast<std::size_t>(pos)] < bound) break;
      --pos;
    }
    if (pos < 0) return;
    ++parts[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < nparts; ++i) parts[static_cast<std::size_t>(i)] = 0;
  }
}

std::vector<Partition> enumerate_partitions(int nparts, int cap) {
  std::vector<Partition> out;
  for_each_partition(nparts, cap, [&](const Partition& lambda) { out.push_back(lambda); });
  return out;
}

}  // namespace ellhyp
