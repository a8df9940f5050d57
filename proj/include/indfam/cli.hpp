#pragma once

namespace indfam {

// Exit codes: 0 ok, 1 mismatch, 2 usage error, 3 budget exceeded.
int cli_run(int argc, const char* const* argv);

} // namespace indfam
