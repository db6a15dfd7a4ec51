#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gp {

struct CompletionRequest {
  std::string prompt;
  double temperature = 0.0;
  int max_output_tokens = 1024;
  std::string model_name;
};

struct CompletionResult {
  std::string text;  // provider text verbatim, outer whitespace trimmed
  std::int64_t latency_ms = 0;
  std::string provider;
  int attempts = 1;
};

// Identifies the query a request belongs to. The live client ignores it; the
// scripted mock uses it to look up its canned response.
struct RouteKey {
  std::string video_id;
  std::string query;
};

class CompletionClient {
 public:
  virtual ~CompletionClient() = default;
  // Must be safe for concurrent calls.
  virtual CompletionResult complete(const CompletionRequest& request,
                                    const RouteKey& key) = 0;
};

// Deterministic scripted client: exact (video_id, query) match, then the
// wildcard default, else MockMiss.
class MockClient : public CompletionClient {
 public:
  static MockClient from_file(const std::filesystem::path& path);
  static MockClient from_json_text(const std::string& json_text);

  CompletionResult complete(const CompletionRequest& request,
                            const RouteKey& key) override;

 private:
  std::optional<std::string> default_response_;
  std::map<std::pair<std::string, std::string>, std::string> entries_;
};

struct HttpResponse {
  int status = 0;
  std::string body;
  std::string transport_error;  // non-empty when the request never completed
};

using HttpHeaders = std::vector<std::pair<std::string, std::string>>;

// (path, request body, headers) -> response. The default transport speaks
// HTTP(S) via cpp-httplib; tests inject fakes.
using Transport = std::function<HttpResponse(
    const std::string& path, const std::string& body, const HttpHeaders&)>;

using Sleeper = std::function<void(std::chrono::milliseconds)>;

struct HttpClientConfig {
  std::string api_base = "https://api.openai.com/v1";
  std::string api_key;
  int max_retries = 3;  // retries after the first attempt; backoff 1s/2s/4s
  std::chrono::milliseconds initial_backoff{1000};
  std::chrono::milliseconds connect_timeout{10000};
  std::chrono::milliseconds read_timeout{120000};
};

// Chat-completion client for any provider speaking the de-facto wire
// protocol: POST {api_base}/chat/completions with a single user message.
// Retries transport failures and 429/5xx with exponential backoff; a
// well-formed completion is returned verbatim no matter how malformed its
// content (that is the parser's business).
class HttpChatClient : public CompletionClient {
 public:
  explicit HttpChatClient(HttpClientConfig config, Transport transport = {},
                          Sleeper sleeper = {});

  CompletionResult complete(const CompletionRequest& request,
                            const RouteKey& key) override;

 private:
  HttpClientConfig config_;
  Transport transport_;
  Sleeper sleeper_;
};

// Decorator enforcing an in-flight cap over any client.
class ThrottledClient : public CompletionClient {
 public:
  ThrottledClient(CompletionClient& inner, int max_in_flight);

  CompletionResult complete(const CompletionRequest& request,
                            const RouteKey& key) override;

 private:
  CompletionClient& inner_;
  int max_in_flight_;
  int in_flight_ = 0;
  std::mutex mutex_;
  std::condition_variable slot_freed_;
};

}  // namespace gp
