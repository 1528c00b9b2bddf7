#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "heds/schema.hpp"

namespace heds {

struct HttpRequest {
  std::string method;  // "GET", "POST", "PUT"
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Routes one request. Only registry PUT touches the file system; every
/// other response depends on the request and registry contents alone.
///
///   GET  /schema
///   POST /validate              canonical body -> report (400 on parse error)
///   POST /render?target=...     markdown|latex; empty body -> blank template
///   GET  /registry              index JSON
///   GET  /registry/{name}       stored canonical sheet
///   PUT  /registry/{name}       422 when the sheet has error findings
HttpResponse handle_request(const HttpRequest& request, const Schema& schema,
                            const std::optional<std::filesystem::path>& registry);

/// Registry sheet names are restricted to [A-Za-z0-9_-]+.
bool is_valid_sheet_name(std::string_view name);

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::optional<std::filesystem::path> registry;
};

class Server {
 public:
  explicit Server(ServerOptions options, const Schema& schema = builtin_schema());
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Returns the bound port, or nullopt on failure.
  std::optional<int> bind();
  /// Blocks until stop() is called. Requires a successful bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace heds
