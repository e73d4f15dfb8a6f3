// Copyright 2026 The triqubit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace triqubit {

/// Single qubit. The numeric value is the qubit's position in |abc>.
enum class Qubit { A = 0, B = 1, C = 2 };

/// Two-qubit reduced subsystem. Declaration order is the tie-break order.
enum class Pair { AB = 0, AC = 1, BC = 2 };

/// One-versus-two cut, named after the single-qubit side.
enum class Cut { A_BC = 0, B_AC = 1, C_AB = 2 };

inline constexpr std::array<Qubit, 3> kQubits{Qubit::A, Qubit::B, Qubit::C};
inline constexpr std::array<Pair, 3> kPairs{Pair::AB, Pair::AC, Pair::BC};
inline constexpr std::array<Cut, 3> kCuts{Cut::A_BC, Cut::B_AC, Cut::C_AB};

constexpr int index_of(Qubit q) { return static_cast<int>(q); }
constexpr int index_of(Pair p) { return static_cast<int>(p); }
constexpr int index_of(Cut c) { return static_cast<int>(c); }

constexpr std::array<Qubit, 2> qubits_of(Pair p) {
    switch (p) {
        case Pair::AB: return {Qubit::A, Qubit::B};
        case Pair::AC: return {Qubit::A, Qubit::C};
        case Pair::BC: return {Qubit::B, Qubit::C};
    }
    return {Qubit::A, Qubit::B};
}

constexpr Qubit single_side(Cut c) { return static_cast<Qubit>(static_cast<int>(c)); }

/// The pair left over once `q` is removed: A -> BC, B -> AC, C -> AB.
constexpr Pair complement(Qubit q) {
    switch (q) {
        case Qubit::A: return Pair::BC;
        case Qubit::B: return Pair::AC;
        case Qubit::C: return Pair::AB;
    }
    return Pair::BC;
}

constexpr Qubit complement(Pair p) {
    switch (p) {
        case Pair::AB: return Qubit::C;
        case Pair::AC: return Qubit::B;
        case Pair::BC: return Qubit::A;
    }
    return Qubit::C;
}

constexpr std::string_view name_of(Qubit q) {
    constexpr std::array<std::string_view, 3> names{"A", "B", "C"};
    return names[index_of(q)];
}
constexpr std::string_view name_of(Pair p) {
    constexpr std::array<std::string_view, 3> names{"AB", "AC", "BC"};
    return names[index_of(p)];
}
constexpr std::string_view name_of(Cut c) {
    constexpr std::array<std::string_view, 3> names{"A|BC", "B|AC", "C|AB"};
    return names[index_of(c)];
}

std::optional<Qubit> parse_qubit(std::string_view s);
std::optional<Pair> parse_pair(std::string_view s);

}  // namespace triqubit
