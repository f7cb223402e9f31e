// SPDX-License-Identifier: Apache-2.0

#include "rankecp/cli.hpp"

int main(int argc, char** argv) { return rankecp::cli_main(argc, argv); }
