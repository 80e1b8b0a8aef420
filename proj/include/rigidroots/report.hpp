#pragma once

// JSON forms of reduction traces and verification reports.

#include <json.hpp>

#include "rigidroots/reduction.hpp"
#include "rigidroots/verification.hpp"

namespace rigid {

void to_json(nlohmann::json& j, const LatticeVector& v);
void from_json(const nlohmann::json& j, LatticeVector& v);

void to_json(nlohmann::json& j, const RootClass& c);
void from_json(const nlohmann::json& j, RootClass& c);

void to_json(nlohmann::json& j, const ReductionStep& s);
void from_json(const nlohmann::json& j, ReductionStep& s);

void to_json(nlohmann::json& j, const ReductionTrace& t);
void from_json(const nlohmann::json& j, ReductionTrace& t);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

std::string branch_name(Branch b);
Branch parse_branch(const std::string& s);

/// Multi-line human-readable trace.
std::string format_trace(const ReductionTrace& t);

}  // namespace rigid
