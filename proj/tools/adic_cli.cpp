// adic: JSON request/response front end.
//
//   echo '{"command":"eval","prime":3,"params":{...}}' | adic
//   adic --batch requests.jsonl

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "adic/adic.h"

namespace {

struct Session {
  adic_ctx* ctx = nullptr;
  bool pretty = false;

  ~Session() { adic_ctx_free(ctx); }

  // Writes the response line and returns the request's exit status.
  int run(const std::string& request) {
    char* response = nullptr;
    int exitStatus = 0;
    const adic_status st = adic_run_request(ctx, request.c_str(), pretty ? 1 : 0, &response, &exitStatus);
    if (st != ADIC_OK) {
      std::cerr << "adic: " << adic_status_name(st) << ": " << adic_last_error(ctx) << "\n";
      return 1;
    }
    std::cout << response << "\n";
    adic_string_free(response);
    return exitStatus;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact valuations on the adic closed unit disc over C_p"};
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool batch = false;
  std::string format = "json";
  std::string input = "-";
  app.add_option("--prime", prime, "Prime used by requests that omit \"prime\"")->envname("ADIC_DEFAULT_PRIME");
  app.add_option("--seed", seed, "Seed used by requests that omit \"seed\"");
  app.add_flag("--batch", batch, "Read one JSON request per line");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
  app.add_option("input", input, "Request file, or - for standard input");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Session session;
  session.pretty = format == "pretty";
  if (adic_ctx_new(prime, seed, &session.ctx) != ADIC_OK) {
    std::cerr << "adic: --prime " << prime << " is not a prime below 2^31\n";
    return 2;
  }

  std::ifstream file;
  if (input != "-") {
    file.open(input);
    if (!file) {
      std::cerr << "adic: cannot open " << input << "\n";
      return 2;
    }
  }
  std::istream& in = input == "-" ? std::cin : file;

  if (!batch) {
    const std::string request((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return session.run(request);
  }
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    worst = std::max(worst, session.run(line));
  }
  return worst;
}
