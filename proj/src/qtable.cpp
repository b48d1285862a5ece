#include "jamlink/qtable.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace jamlink {

namespace {

constexpr std::array<char, 4> kMagic{'J', 'L', 'Q', 'T'};
constexpr std::uint32_t kFormatVersion = 1;

template <typename T>
void write_le(std::ostream& out, T value) {
  // Little-endian host assumed; fields are fixed-width integral/float types.
  out.write(reinterpret_cast<const char*>(&value), sizeof(value));
}

template <typename T>
T read_le(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(value));
  if (!in) throw std::runtime_error("qtable: truncated file");
  return value;
}

}  // namespace

std::uint32_t QTable::key(int state, int action) {
  return static_cast<std::uint32_t>(state) * kActionCount +
         static_cast<std::uint32_t>(action);
}

double QTable::get(int state, int action) const {
  const auto it = entries_.find(key(state, action));
  return it == entries_.end() ? 0.0 : it->second;
}

void QTable::set(int state, int action, double value) {
  entries_[key(state, action)] = value;
}

int QTable::argmax_action(int state) const {
  int best = 0;
  double best_q = get(state, 0);
  for (int a = 1; a < kActionCount; ++a) {
    const double q = get(state, a);
    if (q > best_q) {
      best_q = q;
      best = a;
    }
  }
  return best;
}

void QTable::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("qtable: cannot open for write: " + path);

  // Sorted records keep the file byte-identical across runs.
  std::vector<std::pair<std::uint32_t, double>> records(entries_.begin(),
                                                        entries_.end());
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  out.write(kMagic.data(), kMagic.size());
  write_le(out, kFormatVersion);
  write_le(out, static_cast<std::uint64_t>(records.size()));
  for (const auto& [k, q] : records) {
    write_le(out, k / kActionCount);                           // state
    write_le(out, static_cast<std::uint8_t>(k % kActionCount));  // action
    write_le(out, q);
  }
  if (!out) throw std::runtime_error("qtable: write failed: " + path);
}

QTable QTable::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("qtable: cannot open: " + path);

  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) {
    throw std::runtime_error("qtable: bad magic (not a q-table file): " + path);
  }
  const auto version = read_le<std::uint32_t>(in);
  if (version != kFormatVersion) {
    throw std::runtime_error("qtable: format version mismatch in " + path);
  }
  const auto count = read_le<std::uint64_t>(in);
  QTable table;
  table.entries_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto state = read_le<std::uint32_t>(in);
    const auto action = read_le<std::uint8_t>(in);
    const auto q = read_le<double>(in);
    if (state >= kStateCount || action >= kActionCount) {
      throw std::runtime_error("qtable: record out of range in " + path);
    }
    table.entries_[key(static_cast<int>(state), action)] = q;
  }
  return table;
}

}  // namespace jamlink
