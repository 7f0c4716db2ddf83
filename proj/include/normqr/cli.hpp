#pragma once

namespace normqr {

// Experiment front end. Subcommands:
//   factor <matrix-file> --norm {l1,l2,linf} [--breakdown-tol T] [--out-q F] [--out-r F]
//   sweep  --norm K [--m-list ...] [--kappa-list ...] [--trials N] [--seed S] --out F
//   basis  --m M --n N --norm K --out F
// Exit status: 0 success, 1 invalid arguments, 2 numerical failure,
// 3 I/O failure.
int cli_main(int argc, const char* const* argv);

}  // namespace normqr
