#include <ostream>
#include <stdexcept>

#include "kpe/corpus.hpp"
#include "kpe/utf8.hpp"
#include "json.hpp"

namespace kpe {

void FilterConfig::validate() const {
  if (min_body_tokens == 0 || max_body_tokens == 0 || min_keyphrases == 0 ||
      min_keyphrase_chars == 0 || max_keyphrase_tokens == 0) {
    throw std::invalid_argument("filter bounds must be positive");
  }
  if (min_body_tokens > max_body_tokens) {
    throw std::invalid_argument("min_body_tokens (" + std::to_string(min_body_tokens) +
                                ") exceeds max_body_tokens (" + std::to_string(max_body_tokens) +
                                ")");
  }
}

namespace {

std::size_t word_tokens(std::string_view normalized) {
  std::size_t n = 0;
  for (const auto& t : tokenize(normalized)) {
    const auto cps = utf8::decode(t.surface);
    n += !(cps.size() == 1 && utf8::is_punctuation(cps.front()));
  }
  return n;
}

}  // namespace

std::size_t body_token_count(std::string_view body) {
  return word_tokens(normalize_text(body));
}

std::size_t keyphrase_char_count(std::string_view keyphrase) {
  return utf8::length(normalize_text(keyphrase));
}

std::size_t keyphrase_token_count(std::string_view keyphrase) {
  return word_tokens(normalize_text(keyphrase));
}

FilterResult apply_filters(const std::vector<NewsRecord>& records,
                           const FilterConfig& config) {
  config.validate();
  FilterResult result;
  for (const auto& record : records) {
    const auto reject = [&](std::string_view rule, std::string detail) {
      result.rejections.push_back({record.url, std::string(rule), std::move(detail)});
    };

    const std::size_t body_tokens = body_token_count(record.body);
    if (body_tokens < config.min_body_tokens || body_tokens > config.max_body_tokens) {
      reject(rule::kBodyTokens, "body has " + std::to_string(body_tokens) + " tokens, allowed [" +
                                    std::to_string(config.min_body_tokens) + ", " +
                                    std::to_string(config.max_body_tokens) + "]");
      continue;
    }
    if (record.keyphrases.size() < config.min_keyphrases) {
      reject(rule::kMinKeyphrases, std::to_string(record.keyphrases.size()) +
                                       " keyphrases, need at least " +
                                       std::to_string(config.min_keyphrases));
      continue;
    }
    bool ok = true;
    for (const auto& kp : record.keyphrases) {
      const auto chars = keyphrase_char_count(kp);
      if (chars < config.min_keyphrase_chars) {
        reject(rule::kKeyphraseChars, "keyphrase \"" + kp + "\" has " + std::to_string(chars) +
                                          " characters, need at least " +
                                          std::to_string(config.min_keyphrase_chars));
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto& kp : record.keyphrases) {
      const auto tokens = keyphrase_token_count(kp);
      if (tokens > config.max_keyphrase_tokens) {
        reject(rule::kKeyphraseTokens, "keyphrase \"" + kp + "\" has " + std::to_string(tokens) +
                                           " tokens, allowed at most " +
                                           std::to_string(config.max_keyphrase_tokens));
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    result.kept.push_back(record);
  }
  return result;
}

void write_audit(std::ostream& out, const std::vector<FilterRejection>& rejections) {
  for (const auto& r : rejections) {
    nlohmann::ordered_json obj;
    obj["url"] = r.url;
    obj["rule"] = r.rule;
    obj["detail"] = r.detail;
    out << obj.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) << '\n';
  }
}

}  // namespace kpe
