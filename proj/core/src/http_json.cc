// Copyright 2026 The repattack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "http_json.h"

#include "httplib.h"
#include "repattack/error.h"

namespace repattack::internal {

ParsedUrl ParseUrl(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) {
    throw PreconditionError("only http:// endpoints are supported: " + url);
  }
  const std::size_t slash = url.find('/', kScheme.size());
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

nlohmann::json PostJson(const std::string& url, const nlohmann::json& body,
                        std::chrono::milliseconds timeout,
                        const Headers& headers) {
  const ParsedUrl parsed = ParseUrl(url);
  httplib::Client client(parsed.scheme_host_port);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  httplib::Headers http_headers;
  for (const auto& [name, value] : headers) http_headers.emplace(name, value);

  auto result =
      client.Post(parsed.path, http_headers, body.dump(), "application/json");
  if (!result) {
    const auto err = result.error();
    const std::string what =
        "POST " + url + " failed: " + httplib::to_string(err);
    if (err == httplib::Error::ConnectionTimeout ||
        err == httplib::Error::Read) {
      throw TimeoutError(what);
    }
    throw TransportError(what);
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("POST " + url + " returned HTTP " +
                         std::to_string(result->status) + ": " + result->body);
  }
  auto parsed_body = nlohmann::json::parse(result->body, nullptr,
                                           /*allow_exceptions=*/false);
  if (parsed_body.is_discarded()) {
    throw MalformedResponse("POST " + url + " returned non-JSON body");
  }
  return parsed_body;
}

}  // namespace repattack::internal
