#pragma once

#include <string>

#include "herbrand/gset.hpp"

namespace herbrand {

/// On-disk form of a cyclic module: JSON with fields n, generators,
/// relations, sigma. Integer entries may be JSON numbers or decimal strings
/// (native JSON numbers are unsafe past 2^53).
struct ModuleFile {
    unsigned long n = 1;
    std::size_t generators = 0;
    std::vector<IntVec> relations;
    std::vector<IntVec> sigma;
};

/// Parses and dimension-checks the JSON text; PARSE_ERROR carries position
/// information where the JSON parser provides it.
ModuleFile parse_module_text(const std::string& text);

/// Builds the module and validates the action; validation failures are
/// forwarded as VALIDATION_ERROR.
CyclicModule to_module(const ModuleFile& f);

/// parse_module_text followed by to_module.
CyclicModule parse_module_file(const std::string& text);

/// Canonical JSON serialization (re-runnable as a module file). All entries
/// are decimal strings so output never depends on integer width.
std::string module_to_json(const CyclicModule& m);

/// G-set text format: whitespace-separated tokens `n r pi_0 ... pi_(r-1)`,
/// with `#` starting a comment that runs to end of line.
GSet parse_gset_text(const std::string& text);

std::string gset_to_text(const GSet& x);

}  // namespace herbrand
