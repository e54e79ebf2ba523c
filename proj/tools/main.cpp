// Copyright 2026 The ecbasis Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "ecb_cli.hpp"

int main(int argc, char** argv) {
  return ecb::cli::main_entry(argc, argv, std::cout, std::cerr);
}
