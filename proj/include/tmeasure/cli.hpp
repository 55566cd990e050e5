#pragma once

// Command-line front end.
//
// Exit codes: 0 success, 1 rejected inequality / failed verification /
// failing lemma, 2 usage or parse error.

namespace tmeasure::cli {

int run(int argc, char** argv);

}  // namespace tmeasure::cli
