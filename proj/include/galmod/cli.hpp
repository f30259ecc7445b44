#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace galmod {

// Malformed command line.  The process front end prints the message and
// exits with code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Help was requested; carries the text to print before exiting 0.
struct help_requested {
    std::string text;
};

// status "ok" guarantees outputs is populated; otherwise message holds the
// failure detail and outputs is null.
struct CommandResult {
    std::string command;
    nlohmann::json inputs;
    nlohmann::json outputs;
    std::string status = "ok";  // ok | domain_error | resource_error
    std::string message;

    nlohmann::json to_json() const;
};

// Runs one subcommand; args exclude the program name.  Bad argument syntax
// raises usage_error and --help raises help_requested; semantic failures
// land in the result's status field instead of escaping.
CommandResult run_command(const std::vector<std::string>& args);

// 0 ok, 3 domain_error, 4 resource_error.
int exit_code_for(const CommandResult& res);

// Parse, run, print (JSON by default, tables with --pretty), return the
// process exit code; usage problems yield 2.
int cli_main(int argc, const char* const* argv);

}  // namespace galmod
