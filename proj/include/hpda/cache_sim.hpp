// Copyright 2026 The HPDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hpda/hpda.hpp"
#include "hpda/numeric.hpp"

namespace hpda {

using Bytes = std::vector<std::uint8_t>;

/// Identifies packet `row` of file `file` (both 0-based).
struct PacketId {
  int file = 0;
  int row = 0;
  friend auto operator<=>(const PacketId&, const PacketId&) = default;
};

/// N files, each split into F packets of `packet_bytes` bytes.
class FileLibrary {
 public:
  /// Bytes drawn from std::mt19937_64 seeded with `seed`, eight per draw.
  static FileLibrary random(int n_files, int subpacketization, int packet_bytes,
                            std::uint64_t seed);
  static FileLibrary zeros(int n_files, int subpacketization, int packet_bytes);

  int n_files() const { return n_files_; }
  int subpacketization() const { return f_; }
  int packet_bytes() const { return packet_bytes_; }
  const Bytes& packet(int file, int row) const;
  Bytes file(int n) const;

 private:
  FileLibrary(int n_files, int f, int packet_bytes);
  int n_files_ = 0;
  int f_ = 0;
  int packet_bytes_ = 0;
  std::vector<Bytes> packets_;  // file-major
};

/// Rows a node caches, and the cached packets of every file at those rows.
struct NodeCache {
  std::vector<int> rows;  // ascending
  std::map<PacketId, Bytes> packets;

  bool holds(int row) const;
};

struct CacheState {
  std::vector<NodeCache> mirrors;             // [k1]
  std::vector<std::vector<NodeCache>> users;  // [k1][k2]
};

/// File requested by each user, 0-based.
struct DemandVector {
  int k1 = 0;
  int k2 = 0;
  std::vector<int> files;  // index k1 * K2 + k2

  int at(int mirror, int user) const { return files[static_cast<std::size_t>(mirror) * k2 + user]; }
};

/// A transmitted signal. `terms` lists the packets XORed into `payload`, each
/// appearing once (pairs cancel); receivers use it as the signal header.
struct Signal {
  int id = 0;
  Bytes payload;
  std::vector<PacketId> terms;
};

struct Transcript {
  int f = 0;
  std::vector<Signal> server;
  std::vector<std::vector<Signal>> mirrors;  // [k1]

  Rational r1() const;
  Rational r2() const;
  /// "S <s> <hex>" per server signal, then "M <k1> <s> <hex>" per mirror
  /// signal, 1-based mirror index.
  std::string dump() const;
};

CacheState place(const Hpda& h, const FileLibrary& lib);

/// One signal per server integer, ascending.
std::vector<Signal> server_delivery(const Hpda& h, const FileLibrary& lib, const DemandVector& d);

/// Signals mirror k1 sends its users: the forwarded server signals for
/// S_k1 \ S_m (with packets the mirror caches XORed out), then the signals
/// for S_k1 and S_m built from the mirror cache alone.
std::vector<Signal> mirror_delivery(const Hpda& h, const CacheState& cache, const DemandVector& d,
                                    int k1, const std::vector<Signal>& server_signals);

/// Rebuilds the file user (k1, k2) requested from its own cache and its
/// mirror's signals. Throws DecodeError if some packet cannot be isolated.
Bytes decode_user(const Hpda& h, const CacheState& cache, const std::vector<Signal>& mirror_signals,
                  int k1, int k2, const DemandVector& d);

struct SimulationResult {
  Transcript transcript;
  bool success = false;
  std::vector<std::string> failures;  // one message per user that failed
};

/// Random library from `seed`, full placement and delivery, and a
/// byte-exact check of every user's decoded file.
SimulationResult simulate(const Hpda& h, int n_files, int packet_bytes, const DemandVector& d,
                          std::uint64_t seed);

/// d(k1, k2) = k1 * K2 + k2 (0-based), i.e. every user asks for a different file.
DemandVector worst_case_demand(int k1, int k2, int n_files);

std::string to_hex(const Bytes& bytes);

}  // namespace hpda
