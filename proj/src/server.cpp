#include "heds/server.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "heds/compare.hpp"
#include "heds/document.hpp"
#include "heds/error.hpp"
#include "heds/render.hpp"
#include "heds/validate.hpp"

namespace heds {

namespace {

constexpr std::string_view kRegistryPrefix = "/registry/";

HttpResponse json_response(int status, std::string body) {
  return HttpResponse{status, "application/json", std::move(body)};
}

HttpResponse error_response(int status, const Error& e) {
  nlohmann::ordered_json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  j["paths"] = e.paths();
  if (e.position()) {
    j["line"] = e.position()->line;
    j["column"] = e.position()->column;
  }
  return json_response(status, j.dump(2) + "\n");
}

HttpResponse plain_error(int status, std::string_view code, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  return json_response(status, j.dump(2) + "\n");
}

std::filesystem::path sheet_path(const std::filesystem::path& registry, std::string_view name) {
  return registry / (std::string(name) + std::string(kCanonicalExtension));
}

// Unique per process and call, so concurrent PUTs never share a temp file.
std::filesystem::path temp_path_for(const std::filesystem::path& target) {
  static std::atomic<unsigned long> counter{0};
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << "." << counter++;
  auto p = target;
  p += suffix.str();
  return p;
}

HttpResponse get_sheet(const std::filesystem::path& registry, std::string_view name) {
  std::ifstream in(sheet_path(registry, name), std::ios::binary);
  if (!in) {
    return plain_error(404, "not-found", "no sheet named '" + std::string(name) + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return json_response(200, buf.str());
}

HttpResponse put_sheet(const std::filesystem::path& registry, std::string_view name,
                       const std::string& body, const Schema& schema) {
  Datasheet d = new_empty(schema);
  try {
    d = parse_canonical(body, schema);
  } catch (const Error& e) {
    return error_response(400, e);
  }
  const auto report = validate(d, schema);
  if (!report.ok()) {
    return json_response(422, report_to_json(report));
  }
  const auto target = sheet_path(registry, name);
  const auto temp = temp_path_for(target);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << serialize_canonical(d);
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      return plain_error(500, "io-error", "cannot write sheet");
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    return plain_error(500, "io-error", "cannot store sheet");
  }
  return json_response(200, report_to_json(report));
}

HttpResponse render_request(const HttpRequest& request, const Schema& schema) {
  const auto it = request.query.find("target");
  const auto format =
      render_format_from_string(it == request.query.end() ? "markdown" : it->second);
  if (!format) {
    return plain_error(400, "bad-request", "target must be markdown or latex");
  }
  const std::string type =
      *format == RenderFormat::kMarkdown ? "text/markdown; charset=utf-8" : "application/x-latex";
  if (request.body.find_first_not_of(" \t\r\n") == std::string::npos) {
    return HttpResponse{200, type, render_blank(schema, *format)};
  }
  try {
    return HttpResponse{200, type, render(parse_canonical(request.body, schema), schema, *format)};
  } catch (const Error& e) {
    return error_response(400, e);
  }
}

}  // namespace

bool is_valid_sheet_name(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  for (char c : name) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    if (!ok) {
      return false;
    }
  }
  return true;
}

HttpResponse handle_request(const HttpRequest& request, const Schema& schema,
                            const std::optional<std::filesystem::path>& registry) {
  const auto& m = request.method;
  const auto& path = request.path;

  if (path == "/schema") {
    if (m != "GET") {
      return plain_error(405, "method-not-allowed", "use GET");
    }
    return json_response(200, schema_to_json(schema));
  }
  if (path == "/validate") {
    if (m != "POST") {
      return plain_error(405, "method-not-allowed", "use POST");
    }
    try {
      return json_response(200, report_to_json(validate(parse_canonical(request.body, schema), schema)));
    } catch (const Error& e) {
      return error_response(400, e);
    }
  }
  if (path == "/render") {
    if (m != "POST") {
      return plain_error(405, "method-not-allowed", "use POST");
    }
    return render_request(request, schema);
  }
  if (path == "/registry" || path.starts_with(kRegistryPrefix)) {
    if (!registry) {
      return plain_error(404, "no-registry", "server was started without a registry directory");
    }
    if (path == "/registry") {
      if (m != "GET") {
        return plain_error(405, "method-not-allowed", "use GET");
      }
      try {
        return json_response(200, index_to_json(build_index(*registry, schema)));
      } catch (const Error& e) {
        return error_response(500, e);
      }
    }
    const std::string_view name = std::string_view(path).substr(kRegistryPrefix.size());
    if (!is_valid_sheet_name(name)) {
      return plain_error(400, "bad-request", "sheet names may use letters, digits, '_' and '-'");
    }
    if (m == "GET") {
      return get_sheet(*registry, name);
    }
    if (m == "PUT") {
      return put_sheet(*registry, name, request.body, schema);
    }
    return plain_error(405, "method-not-allowed", "use GET or PUT");
  }
  return plain_error(404, "not-found", "no route for " + path);
}

struct Server::Impl {
  ServerOptions options;
  const Schema& schema;
  httplib::Server http;

  Impl(ServerOptions o, const Schema& s) : options(std::move(o)), schema(s) {
    // The library default adds SO_REUSEPORT, which lets a second server share
    // a busy port instead of failing to bind.
    http.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    const auto adapt = [this](const httplib::Request& req, httplib::Response& res) {
      HttpRequest r{req.method, req.path, {}, req.body};
      for (const auto& [k, v] : req.params) {
        r.query.emplace(k, v);
      }
      const auto out = handle_request(r, schema, options.registry);
      res.status = out.status;
      res.set_content(out.body, out.content_type);
    };
    http.Get(".*", adapt);
    http.Post(".*", adapt);
    http.Put(".*", adapt);
  }
};

Server::Server(ServerOptions options, const Schema& schema)
    : impl_(std::make_unique<Impl>(std::move(options), schema)) {}

Server::~Server() { stop(); }

std::optional<int> Server::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    const int port = impl_->http.bind_to_any_port(o.host);
    if (port <= 0) {
      return std::nullopt;
    }
    o.port = port;
    return port;
  }
  if (!impl_->http.bind_to_port(o.host, o.port)) {
    return std::nullopt;
  }
  return o.port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) {
    impl_->http.stop();
  }
}

}  // namespace heds
