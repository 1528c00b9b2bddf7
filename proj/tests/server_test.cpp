#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "heds/render.hpp"
#include "heds/server.hpp"
#include "heds/validate.hpp"
#include "support/fixtures.hpp"

namespace heds {
namespace {

using testing::golden_datasheet;
using testing::TempDir;
using testing::with;

const Schema& S() { return builtin_schema(); }

HttpResponse call(std::string method, std::string path, std::string body = {},
                  const std::optional<std::filesystem::path>& registry = std::nullopt,
                  std::map<std::string, std::string> query = {}) {
  return handle_request(HttpRequest{std::move(method), std::move(path), std::move(query),
                                    std::move(body)},
                        S(), registry);
}

TEST(Handlers, Schema) {
  const auto r = call("GET", "/schema");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, schema_to_json(S()));
  EXPECT_EQ(call("POST", "/schema").status, 405);
}

TEST(Handlers, Validate) {
  auto r = call("POST", "/validate", serialize_canonical(golden_datasheet()));
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(nlohmann::json::parse(r.body)["errors"], 0);

  r = call("POST", "/validate", serialize_canonical(with(golden_datasheet(), "3.1.1", "0")));
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(nlohmann::json::parse(r.body)["errors"], 1);

  r = call("POST", "/validate", "{\"schema_version\":");
  EXPECT_EQ(r.status, 400);
  const auto j = nlohmann::json::parse(r.body);
  EXPECT_EQ(j["error"], "syntax-error");
  EXPECT_EQ(j["line"], 1);
}

TEST(Handlers, Render) {
  const auto body = serialize_canonical(golden_datasheet());
  auto r = call("POST", "/render", body, std::nullopt, {{"target", "markdown"}});
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, render(golden_datasheet(), S(), RenderFormat::kMarkdown));

  r = call("POST", "/render", body, std::nullopt, {{"target", "latex"}});
  EXPECT_EQ(r.body, render(golden_datasheet(), S(), RenderFormat::kLatex));

  r = call("POST", "/render", "", std::nullopt, {{"target", "markdown"}});
  EXPECT_EQ(r.body, render_blank(S(), RenderFormat::kMarkdown));

  EXPECT_EQ(call("POST", "/render", body, std::nullopt, {{"target", "pdf"}}).status, 400);
  EXPECT_EQ(call("POST", "/render", "{").status, 400);
}

TEST(Handlers, Registry) {
  TempDir dir;
  EXPECT_EQ(call("GET", "/registry").status, 404);

  const auto golden = serialize_canonical(golden_datasheet());
  auto r = call("PUT", "/registry/golden", golden, dir.path());
  EXPECT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(testing::read_file(dir / "golden.heds.json"), golden);

  r = call("GET", "/registry/golden", {}, dir.path());
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body, golden);

  r = call("PUT", "/registry/bad", serialize_canonical(with(golden_datasheet(), "3.1.1", "0")),
           dir.path());
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(nlohmann::json::parse(r.body)["diagnostics"][0]["rule"], "R-INT");
  EXPECT_FALSE(std::filesystem::exists(dir / "bad.heds.json"));

  EXPECT_EQ(call("PUT", "/registry/broken", "{", dir.path()).status, 400);
  EXPECT_EQ(call("GET", "/registry/missing", {}, dir.path()).status, 404);
  EXPECT_EQ(call("GET", "/registry/..%2Fetc", {}, dir.path()).status, 400);
  EXPECT_EQ(call("GET", "/registry/a.b", {}, dir.path()).status, 400);

  r = call("GET", "/registry", {}, dir.path());
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(nlohmann::json::parse(r.body)["entries"][0]["file"], "golden.heds.json");

  // Only the stored sheet remains; no temp files are left behind.
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir.path()),
                          std::filesystem::directory_iterator()),
            1);
}

TEST(Handlers, SheetNames) {
  EXPECT_TRUE(is_valid_sheet_name("exp_01-b"));
  EXPECT_FALSE(is_valid_sheet_name(""));
  EXPECT_FALSE(is_valid_sheet_name("../x"));
  EXPECT_FALSE(is_valid_sheet_name("a b"));
}

TEST(Handlers, UnknownRoute) { EXPECT_EQ(call("GET", "/nope").status, 404); }

class LiveServer : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<Server>(ServerOptions{"127.0.0.1", 0, dir_.path()});
    const auto port = server_->bind();
    ASSERT_TRUE(port);
    port_ = *port;
    thread_ = std::thread([this] { server_->run(); });
  }
  void TearDown() override {
    server_->stop();
    if (thread_.joinable()) {
      thread_.join();
    }
  }

  TempDir dir_;
  std::unique_ptr<Server> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(LiveServer, EndToEnd) {
  httplib::Client client("127.0.0.1", port_);
  auto res = client.Get("/schema");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["max_criteria"], 10);

  res = client.Post("/validate", "garbage", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  const auto golden = serialize_canonical(golden_datasheet());
  res = client.Post("/validate", golden, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body)["errors"], 0);

  res = client.Post("/render?target=latex", golden, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/x-latex");

  res = client.Put("/registry/exp1", golden, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  res = client.Get("/registry/exp1");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->body, golden);
}

TEST_F(LiveServer, ConcurrentPuts) {
  const auto golden = serialize_canonical(golden_datasheet());
  std::vector<std::thread> workers;
  std::atomic<int> ok{0};
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&] {
      httplib::Client client("127.0.0.1", port_);
      for (int k = 0; k < 5; ++k) {
        if (auto res = client.Put("/registry/shared", golden, "application/json");
            res && res->status == 200) {
          ++ok;
        }
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
  EXPECT_EQ(ok, 40);
  EXPECT_EQ(testing::read_file(dir_ / "shared.heds.json"), golden);
}

TEST(ServerBind, PortInUseFails) {
  Server first(ServerOptions{"127.0.0.1", 0, std::nullopt});
  const auto port = first.bind();
  ASSERT_TRUE(port);
  Server second(ServerOptions{"127.0.0.1", *port, std::nullopt});
  EXPECT_FALSE(second.bind());
}

}  // namespace
}  // namespace heds
