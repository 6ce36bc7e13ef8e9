#pragma once

#include <string>

#include <json.hpp>

#include "wmono/monogamy.hpp"

namespace wmono {

// Spec object: {"n": int, "d": int, "coeffs": [[s, i, re, im], ...],
// "p": float optional, "ancilla": [[i, re, im], ...] optional}. Subsystem
// and level labels are 1-based on the wire, 0-based in the API.
MixtureSpec parse_mixture_spec(const nlohmann::json& j);
nlohmann::json mixture_spec_to_json(const MixtureSpec& mix);

// Partition form: list of lists of 1-based subsystem indices.
Partition parse_partition(const nlohmann::json& j);
nlohmann::json partition_to_json(const Partition& partition);

nlohmann::json report_to_json(const MonogamyReport& report);

// CSV flattening, one row per (instance, focus).
std::string report_csv_header();
std::string report_csv_row(const std::string& instance, const MonogamyReport& report);

// Shortest representation that round-trips a double.
std::string format_double(double value);

}  // namespace wmono
