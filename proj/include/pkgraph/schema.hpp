// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The pkgraph Authors

#pragma once

// Labels, relationship types and property keys of the program knowledge graph.

namespace pkgraph::schema {

inline constexpr const char* kCweLabel = "CWE";
inline constexpr const char* kCveLabel = "CVE";
inline constexpr const char* kScoreLabel = "Score";
inline constexpr const char* kProductLabel = "Product";
inline constexpr const char* kCallGraphLabel = "CallGraph";

inline constexpr const char* kCalls = "CALLS";
inline constexpr const char* kAffects = "AFFECTS";
inline constexpr const char* kHasCve = "HAS_CVE";
inline constexpr const char* kScored = "SCORED";

inline constexpr const char* kCweId = "CWE-ID";
inline constexpr const char* kCveId = "CVE-ID";
inline constexpr const char* kName = "Name";
inline constexpr const char* kDescription = "Description";
inline constexpr const char* kFunctionEvents = "Function Events";
inline constexpr const char* kCvss2 = "CVSS2";
inline constexpr const char* kVersion = "Version";
inline constexpr const char* kExecOrder = "ExecOrder";
/// Arguments are stored as Argument1, Argument2, ...
inline constexpr const char* kArgumentPrefix = "Argument";

}  // namespace pkgraph::schema
