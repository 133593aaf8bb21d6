#pragma once

#include <string>
#include <string_view>

#include "rsim/core.hpp"

namespace rsim {

// Line-oriented text formats (UTF-8, LF or CRLF accepted, LF emitted).
//
// Model (.rsys): one reaction per non-blank, non-comment line, written as
// three comma-separated fields `<reactants> , <inhibitors> , <products>`,
// each field a whitespace-separated list of entity names. `#` starts a
// comment running to end of line. Entities are numbered in first-appearance
// order.
//
// Context (.ctx) and trajectory (.traj): one state per non-blank,
// non-comment line as whitespace-separated entity names; a line consisting
// of a single '.' is the empty state.

ReactionSystem parse_model(std::string_view text, Strictness mode = Strictness::Strict);
std::string write_model(const ReactionSystem& sys);

ContextSequence parse_context(std::string_view text, const ReactionSystem& sys);
std::string write_context(const ContextSequence& ctx, const ReactionSystem& sys);

Trajectory parse_trajectory(std::string_view text, const ReactionSystem& sys);
std::string write_trajectory(const Trajectory& tr, const ReactionSystem& sys);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace rsim
