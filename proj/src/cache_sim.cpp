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

#include "hpda/cache_sim.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hpda/errors.hpp"

namespace hpda {

namespace {

void xor_into(Bytes& acc, const Bytes& packet) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= packet[i];
}

// Adds a packet to a term list, removing it instead if it is already there.
void toggle(std::vector<PacketId>& terms, PacketId id) {
  const auto it = std::find(terms.begin(), terms.end(), id);
  if (it == terms.end()) {
    terms.push_back(id);
  } else {
    terms.erase(it);
  }
}

void check_demand(const Hpda& h, const DemandVector& d, int n_files) {
  if (d.k1 != h.params().k1 || d.k2 != h.params().k2 ||
      d.files.size() != static_cast<std::size_t>(d.k1) * d.k2) {
    throw DimensionError("demand vector shape does not match the HPDA");
  }
  for (int file : d.files) {
    if (file < 0 || file >= n_files) {
      throw ParameterError("demand index " + std::to_string(file + 1) + " outside [1, " +
                           std::to_string(n_files) + "]");
    }
  }
}

NodeCache fill(const std::vector<int>& rows, const FileLibrary& lib) {
  NodeCache node{rows, {}};
  for (int n = 0; n < lib.n_files(); ++n) {
    for (int r : rows) node.packets.emplace(PacketId{n, r}, lib.packet(n, r));
  }
  return node;
}

const Bytes& cached(const NodeCache& node, PacketId id, const std::string& who) {
  const auto it = node.packets.find(id);
  if (it == node.packets.end()) {
    throw DecodeError(who + " does not cache packet " + std::to_string(id.row + 1) + " of file " +
                      std::to_string(id.file + 1));
  }
  return it->second;
}

}  // namespace

FileLibrary::FileLibrary(int n_files, int f, int packet_bytes)
    : n_files_(n_files), f_(f), packet_bytes_(packet_bytes) {
  if (n_files < 1 || f < 1 || packet_bytes < 1) {
    throw ParameterError("library needs N, F and packet size >= 1");
  }
  packets_.assign(static_cast<std::size_t>(n_files) * f,
                  Bytes(static_cast<std::size_t>(packet_bytes), 0));
}

FileLibrary FileLibrary::random(int n_files, int subpacketization, int packet_bytes,
                                std::uint64_t seed) {
  FileLibrary lib(n_files, subpacketization, packet_bytes);
  std::mt19937_64 rng(seed);
  for (Bytes& p : lib.packets_) {
    for (std::size_t i = 0; i < p.size(); i += 8) {
      std::uint64_t word = rng();
      for (std::size_t b = i; b < std::min(p.size(), i + 8); ++b) {
        p[b] = static_cast<std::uint8_t>(word & 0xFF);
        word >>= 8;
      }
    }
  }
  return lib;
}

FileLibrary FileLibrary::zeros(int n_files, int subpacketization, int packet_bytes) {
  return FileLibrary(n_files, subpacketization, packet_bytes);
}

const Bytes& FileLibrary::packet(int file, int row) const {
  if (file < 0 || file >= n_files_ || row < 0 || row >= f_) {
    throw ParameterError("packet (" + std::to_string(file + 1) + "," + std::to_string(row + 1) +
                         ") outside the library");
  }
  return packets_[static_cast<std::size_t>(file) * f_ + row];
}

Bytes FileLibrary::file(int n) const {
  Bytes out;
  out.reserve(static_cast<std::size_t>(f_) * packet_bytes_);
  for (int r = 0; r < f_; ++r) {
    const Bytes& p = packet(n, r);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

bool NodeCache::holds(int row) const { return std::binary_search(rows.begin(), rows.end(), row); }

Rational Transcript::r1() const { return ratio(static_cast<long long>(server.size()), f); }

Rational Transcript::r2() const {
  std::size_t widest = 0;
  for (const auto& m : mirrors) widest = std::max(widest, m.size());
  return ratio(static_cast<long long>(widest), f);
}

std::string to_hex(const Bytes& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

std::string Transcript::dump() const {
  std::ostringstream out;
  for (const Signal& s : server) out << "S " << s.id << ' ' << to_hex(s.payload) << '\n';
  for (std::size_t k = 0; k < mirrors.size(); ++k) {
    for (const Signal& s : mirrors[k]) {
      out << "M " << k + 1 << ' ' << s.id << ' ' << to_hex(s.payload) << '\n';
    }
  }
  return out.str();
}

CacheState place(const Hpda& h, const FileLibrary& lib) {
  const HpdaParams& p = h.params();
  if (lib.subpacketization() != p.f) {
    throw DimensionError("library has F=" + std::to_string(lib.subpacketization()) +
                         " but the HPDA has F=" + std::to_string(p.f));
  }
  CacheState state;
  for (int k1 = 0; k1 < p.k1; ++k1) {
    state.mirrors.push_back(fill(h.mirror().starred_rows(k1), lib));
    std::vector<NodeCache> users;
    for (int k2 = 0; k2 < p.k2; ++k2) {
      std::vector<int> rows;
      for (int r = 0; r < p.f; ++r) {
        if (h.at(k1, r, k2).is_star()) rows.push_back(r);
      }
      users.push_back(fill(rows, lib));
    }
    state.users.push_back(std::move(users));
  }
  return state;
}

std::vector<Signal> server_delivery(const Hpda& h, const FileLibrary& lib, const DemandVector& d) {
  check_demand(h, d, lib.n_files());
  const auto occ = h.occurrences();
  std::vector<Signal> out;
  for (int s : h.server_integers()) {
    Signal sig{s, Bytes(static_cast<std::size_t>(lib.packet_bytes()), 0), {}};
    const auto it = occ.find(s);
    if (it != occ.end()) {
      for (const BlockCell& c : it->second) {
        const PacketId id{d.at(c.block, c.col), c.row};
        xor_into(sig.payload, lib.packet(id.file, id.row));
        toggle(sig.terms, id);
      }
    }
    out.push_back(std::move(sig));
  }
  return out;
}

std::vector<Signal> mirror_delivery(const Hpda& h, const CacheState& cache, const DemandVector& d,
                                    int k1, const std::vector<Signal>& server_signals) {
  const NodeCache& store = cache.mirrors.at(static_cast<std::size_t>(k1));
  const std::string who = "mirror " + std::to_string(k1 + 1);
  const auto occ = h.occurrences();
  const IntegerSet& own = h.block_set(k1);
  std::vector<Signal> out;

  for (int s : own) {
    if (h.mirror_only().contains(s)) continue;
    const auto sig = std::find_if(server_signals.begin(), server_signals.end(),
                                  [&](const Signal& x) { return x.id == s; });
    if (sig == server_signals.end()) {
      throw ParameterError(who + " is missing server signal " + std::to_string(s));
    }
    Signal fwd = *sig;
    for (const BlockCell& c : occ.at(s)) {
      if (c.block == k1 || !store.holds(c.row)) continue;
      const PacketId id{d.at(c.block, c.col), c.row};
      xor_into(fwd.payload, cached(store, id, who));
      toggle(fwd.terms, id);
    }
    out.push_back(std::move(fwd));
  }

  for (int s : own) {
    if (!h.mirror_only().contains(s)) continue;
    Signal fresh{s, {}, {}};
    for (const BlockCell& c : occ.at(s)) {
      if (c.block != k1) continue;
      const PacketId id{d.at(k1, c.col), c.row};
      const Bytes& packet = cached(store, id, who);
      if (fresh.payload.empty()) fresh.payload.assign(packet.size(), 0);
      xor_into(fresh.payload, packet);
      toggle(fresh.terms, id);
    }
    out.push_back(std::move(fresh));
  }
  return out;
}

Bytes decode_user(const Hpda& h, const CacheState& cache, const std::vector<Signal>& mirror_signals,
                  int k1, int k2, const DemandVector& d) {
  const NodeCache& store =
      cache.users.at(static_cast<std::size_t>(k1)).at(static_cast<std::size_t>(k2));
  const std::string who = "user (" + std::to_string(k1 + 1) + "," + std::to_string(k2 + 1) + ")";
  const int want = d.at(k1, k2);
  const int f = h.params().f;

  std::vector<Bytes> rows(static_cast<std::size_t>(f));
  for (int r = 0; r < f; ++r) {
    const Entry e = h.at(k1, r, k2);
    if (e.is_star()) {
      rows[r] = cached(store, {want, r}, who);
      continue;
    }
    const auto sig = std::find_if(mirror_signals.begin(), mirror_signals.end(),
                                  [&](const Signal& x) { return x.id == e.value(); });
    if (sig == mirror_signals.end()) {
      throw DecodeError(who + " received no signal " + std::to_string(e.value()));
    }
    Bytes payload = sig->payload;
    bool found = false;
    for (const PacketId& id : sig->terms) {
      if (id == PacketId{want, r}) {
        found = true;
      } else if (store.holds(id.row)) {
        xor_into(payload, cached(store, id, who));
      } else {
        throw DecodeError(who + " cannot cancel packet " + std::to_string(id.row + 1) +
                          " of file " + std::to_string(id.file + 1) + " in signal " +
                          std::to_string(e.value()));
      }
    }
    if (!found) {
      throw DecodeError(who + ": signal " + std::to_string(e.value()) + " does not carry packet " +
                        std::to_string(r + 1));
    }
    rows[r] = std::move(payload);
  }

  Bytes out;
  for (const Bytes& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

SimulationResult simulate(const Hpda& h, int n_files, int packet_bytes, const DemandVector& d,
                          std::uint64_t seed) {
  const FileLibrary lib = FileLibrary::random(n_files, h.params().f, packet_bytes, seed);
  check_demand(h, d, n_files);
  const CacheState cache = place(h, lib);

  SimulationResult result;
  result.transcript.f = h.params().f;
  result.transcript.server = server_delivery(h, lib, d);
  for (int k1 = 0; k1 < h.params().k1; ++k1) {
    result.transcript.mirrors.push_back(
        mirror_delivery(h, cache, d, k1, result.transcript.server));
  }
  for (int k1 = 0; k1 < h.params().k1; ++k1) {
    for (int k2 = 0; k2 < h.params().k2; ++k2) {
      try {
        const Bytes got = decode_user(h, cache, result.transcript.mirrors[k1], k1, k2, d);
        if (got != lib.file(d.at(k1, k2))) {
          result.failures.push_back("user (" + std::to_string(k1 + 1) + "," +
                                    std::to_string(k2 + 1) + ") decoded wrong bytes");
        }
      } catch (const DecodeError& e) {
        result.failures.push_back(e.what());
      }
    }
  }
  result.success = result.failures.empty();
  return result;
}

DemandVector worst_case_demand(int k1, int k2, int n_files) {
  if (k1 < 1 || k2 < 1) throw ParameterError("K1 and K2 must be positive");
  if (n_files < k1 * k2) {
    throw ParameterError("distinct demands need N >= K1*K2 = " + std::to_string(k1 * k2));
  }
  DemandVector d{k1, k2, {}};
  for (int i = 0; i < k1 * k2; ++i) d.files.push_back(i);
  return d;
}

}  // namespace hpda
