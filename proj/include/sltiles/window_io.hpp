#pragma once

#include <iosfwd>
#include <string>

#include "sltiles/window.hpp"

namespace sltiles {

// JSON schema:
//   {"k": int?, "origin": [i,j], "rows": n, "cols": m,
//    "entries": [["p/q",...],...]}
// with rationals as canonical strings ("3", "-7/2").
std::string window_to_json(const Window& w);
Window window_from_json(const std::string& text);

// CSV: plain comma-separated grid with a leading comment line "# origin i j".
std::string window_to_csv(const Window& w);
Window window_from_csv(const std::string& text);

// Text grid with right-aligned columns (figure-style rendering).
std::string window_to_text(const Window& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Dispatch on format name "json" | "csv" | "text".
std::string window_to_format(const Window& w, const std::string& format);
Window window_from_file(const std::string& path);  // sniffs JSON vs CSV

}  // namespace sltiles
