#include "ircsna/chatlog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ircsna/error.hpp"
#include "ircsna/parallel.hpp"
#include "ircsna/text.hpp"

namespace ircsna {

namespace {

bool is_space(char c) noexcept { return c == ' ' || c == '\t'; }

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

std::optional<int> two_digits(std::string_view s, std::size_t pos) {
  if (pos + 2 > s.size() || !is_digit(s[pos]) || !is_digit(s[pos + 1])) return std::nullopt;
  return (s[pos] - '0') * 10 + (s[pos + 1] - '0');
}

// Consumes "[HH:MM]" or "[HH:MM:SS]" and returns the offset just past ']'.
std::optional<std::size_t> parse_timestamp(std::string_view line, TimeOfDay& time) {
  if (line.size() < 7 || line[0] != '[') return std::nullopt;
  const auto hh = two_digits(line, 1);
  const auto mm = two_digits(line, 4);
  if (!hh || !mm || line[3] != ':' || *hh > 23 || *mm > 59) return std::nullopt;
  time = TimeOfDay{*hh, *mm, std::nullopt};
  if (line[6] == ']') return 7;
  if (line.size() < 10 || line[6] != ':') return std::nullopt;
  const auto ss = two_digits(line, 7);
  if (!ss || *ss > 59 || line[9] != ']') return std::nullopt;
  time.second = *ss;
  return 10;
}

std::string_view strip_status_prefix(std::string_view nick) {
  while (!nick.empty() && (nick.front() == '@' || nick.front() == '+')) nick.remove_prefix(1);
  return nick;
}

bool valid_nick(std::string_view nick) {
  if (nick.empty()) return false;
  return std::none_of(nick.begin(), nick.end(), [](char c) {
    return is_space(c) || c == '<' || c == '>' || c == '\n' || c == '\r';
  });
}

// Splits "nick rest" at the first blank.
std::pair<std::string_view, std::string_view> split_token(std::string_view s) {
  const auto end = std::find_if(s.begin(), s.end(), is_space);
  const auto nick = s.substr(0, static_cast<std::size_t>(end - s.begin()));
  auto rest = s.substr(nick.size());
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  return {nick, rest};
}

constexpr std::array<std::string_view, 6> kNoticeMarkers = {"===", "-!-", "***", "-->", "<--", "--"};
constexpr std::array<std::string_view, 8> kNoticeKeywords = {
    "joined", "has left", "left the", "quit", "part", "topic", "is now known as", "kicked"};

std::optional<ChatMessage> parse_notice(std::string_view rest, const Date& date,
                                        const TimeOfDay& time) {
  for (const auto marker : kNoticeMarkers) {
    if (rest.size() <= marker.size() || rest.substr(0, marker.size()) != marker ||
        !is_space(rest[marker.size()])) {
      continue;
    }
    auto [nick, body] = split_token(rest.substr(marker.size() + 1));
    nick = strip_status_prefix(nick);
    if (!valid_nick(nick)) return std::nullopt;
    const std::string lowered = text::fold_case(body);
    const bool recognized = std::any_of(kNoticeKeywords.begin(), kNoticeKeywords.end(),
                                        [&](std::string_view k) {
                                          return lowered.find(k) != std::string::npos;
                                        });
    if (!recognized) return std::nullopt;
    return ChatMessage{date, time, std::string(nick), std::string(body), MessageKind::system};
  }
  return std::nullopt;
}

std::optional<ChatMessage> parse_clean_line(std::string_view line, const Date& date) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  TimeOfDay time;
  const auto offset = parse_timestamp(line, time);
  if (!offset || *offset >= line.size() || line[*offset] != ' ') return std::nullopt;
  auto rest = line.substr(*offset + 1);

  if (!rest.empty() && rest.front() == '<' && !rest.starts_with("<-- ")) {
    const auto close = rest.find('>');
    if (close == std::string_view::npos) return std::nullopt;
    const auto nick = strip_status_prefix(rest.substr(1, close - 1));
    if (!valid_nick(nick)) return std::nullopt;
    auto body = rest.substr(close + 1);
    if (!body.empty()) {
      if (body.front() != ' ') return std::nullopt;
      body.remove_prefix(1);
    }
    return ChatMessage{date, time, std::string(nick), std::string(body), MessageKind::user_message};
  }

  if (rest.size() >= 2 && rest[0] == '*' && rest[1] == ' ') {
    auto [nick, body] = split_token(rest.substr(2));
    nick = strip_status_prefix(nick);
    if (!valid_nick(nick)) return std::nullopt;
    return ChatMessage{date, time, std::string(nick), std::string(body), MessageKind::action};
  }

  return parse_notice(rest, date, time);
}

struct FileParse {
  std::vector<ChatMessage> messages;
  SourceFileSummary summary;
};

FileParse parse_contents(std::string_view contents, const LogSource& source) {
  FileParse result;
  result.summary.path = source.path;
  result.summary.date = source.date;
  std::size_t pos = 0;
  while (pos < contents.size()) {
    auto end = contents.find('\n', pos);
    if (end == std::string_view::npos) end = contents.size();
    const auto line = contents.substr(pos, end - pos);
    pos = end + 1;
    ++result.summary.total_lines;
    if (auto msg = parse_line(line, source.date, result.summary.skipped_lines)) {
      result.messages.push_back(std::move(*msg));
      ++result.summary.parsed_lines;
    }
  }
  return result;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read log file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading log file '" + path.string() + "'");
  return std::move(buffer).str();
}

}  // namespace

std::optional<Date> Date::parse(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  int y = 0;
  int m = 0;
  int d = 0;
  const auto ok = [](std::string_view part, int& value) {
    if (!std::all_of(part.begin(), part.end(), is_digit)) return false;
    return std::from_chars(part.data(), part.data() + part.size(), value).ec == std::errc{};
  };
  if (!ok(s.substr(0, 4), y) || !ok(s.substr(5, 2), m) || !ok(s.substr(8, 2), d)) return std::nullopt;
  if (m < 1 || m > 12 || d < 1 || d > 31) return std::nullopt;
  return Date{y, m, d};
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::string TimeOfDay::to_string() const {
  char buf[16];
  if (second) {
    std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", hour, minute, *second);
  } else {
    std::snprintf(buf, sizeof buf, "%02d:%02d", hour, minute);
  }
  return buf;
}

std::string_view to_string(MessageKind kind) noexcept {
  switch (kind) {
    case MessageKind::user_message: return "user_message";
    case MessageKind::action: return "action";
    case MessageKind::system: return "system";
  }
  return "user_message";
}

std::optional<MessageKind> parse_message_kind(std::string_view text) noexcept {
  if (text == "user_message") return MessageKind::user_message;
  if (text == "action") return MessageKind::action;
  if (text == "system") return MessageKind::system;
  return std::nullopt;
}

std::size_t ChatCorpus::skipped_lines() const noexcept {
  std::size_t total = 0;
  for (const auto& f : source_files) total += f.skipped_lines;
  return total;
}

std::optional<ChatMessage> parse_line(std::string_view line, const Date& date) {
  std::size_t ignored = 0;
  return parse_line(line, date, ignored);
}

std::optional<ChatMessage> parse_line(std::string_view line, const Date& date,
                                      std::size_t& malformed) {
  std::optional<ChatMessage> msg;
  if (text::is_ascii(line)) {
    msg = parse_clean_line(line, date);
  } else {
    msg = parse_clean_line(text::sanitize_utf8(line), date);
  }
  if (!msg) ++malformed;
  return msg;
}

ChatCorpus parse_text(std::string_view contents, const Date& date) {
  auto parsed = parse_contents(contents, LogSource{"<memory>", date});
  ChatCorpus corpus;
  corpus.messages = std::move(parsed.messages);
  corpus.source_files.push_back(std::move(parsed.summary));
  return corpus;
}

ChatCorpus parse_corpus(const std::vector<LogSource>& files, unsigned threads) {
  if (files.empty()) throw Error("empty input set");
  for (std::size_t i = 1; i < files.size(); ++i) {
    if (!(files[i - 1].date < files[i].date)) {
      throw InvalidArgument("log dates must be strictly increasing: '" + files[i].path.string() +
                            "' (" + files[i].date.to_string() + ") follows " +
                            files[i - 1].date.to_string());
    }
  }
  std::vector<FileParse> parsed(files.size());
  parallel_for(files.size(), threads, [&](std::size_t i) {
    parsed[i] = parse_contents(read_file(files[i].path), files[i]);
  });
  ChatCorpus corpus;
  for (auto& p : parsed) {
    std::move(p.messages.begin(), p.messages.end(), std::back_inserter(corpus.messages));
    corpus.source_files.push_back(std::move(p.summary));
  }
  return corpus;
}

std::vector<LogSource> discover_log_files(const std::vector<std::filesystem::path>& paths) {
  namespace fs = std::filesystem;
  std::vector<LogSource> sources;
  const auto add_file = [&](const fs::path& p, bool strict) {
    const auto date = Date::parse(p.stem().string());
    if (!date) {
      if (strict) {
        throw InvalidArgument("log file name must be YYYY-MM-DD.txt: '" + p.string() + "'");
      }
      return;
    }
    sources.push_back(LogSource{p, *date});
  };
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") add_file(entry.path(), false);
      }
    } else {
      add_file(p, true);
    }
  }
  std::sort(sources.begin(), sources.end(),
            [](const LogSource& a, const LogSource& b) { return a.date < b.date; });
  return sources;
}

std::vector<LogSource> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw IoError("cannot read manifest '" + manifest.string() + "'");
  std::vector<LogSource> sources;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string path;
    std::string date_text;
    if (!(fields >> path)) continue;
    if (!(fields >> date_text)) {
      throw FormatError(manifest.string() + ":" + std::to_string(line_no) + ": expected 'path date'");
    }
    const auto date = Date::parse(date_text);
    if (!date) {
      throw FormatError(manifest.string() + ":" + std::to_string(line_no) + ": bad date '" +
                        date_text + "'");
    }
    std::filesystem::path p(path);
    if (p.is_relative()) p = manifest.parent_path() / p;
    sources.push_back(LogSource{p, *date});
  }
  return sources;
}

std::string canonical_nick(std::string_view nick) {
  return text::fold_case(strip_status_prefix(nick));
}

bool Roster::contains(std::string_view canonical) const { return counts_.find(canonical) != counts_.end(); }

std::size_t Roster::count(std::string_view canonical) const {
  const auto it = counts_.find(canonical);
  return it == counts_.end() ? 0 : it->second;
}

void Roster::add(std::string canonical, std::size_t messages) { counts_[std::move(canonical)] += messages; }

Roster build_roster(const ChatCorpus& corpus) {
  Roster roster;
  for (const auto& msg : corpus.messages) {
    if (msg.kind == MessageKind::system) continue;
    roster.add(canonical_nick(msg.nick));
  }
  return roster;
}

void write_corpus(std::ostream& out, const ChatCorpus& corpus) {
  for (const auto& msg : corpus.messages) {
    nlohmann::ordered_json record;
    record["date"] = msg.date.to_string();
    record["time"] = msg.time.to_string();
    record["nick"] = msg.nick;
    record["body"] = msg.body;
    record["kind"] = to_string(msg.kind);
    out << record.dump() << '\n';
  }
}

ChatCorpus read_corpus(std::istream& in) {
  ChatCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto where = "corpus line " + std::to_string(line_no);
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(where + ": " + e.what());
    }
    const auto field = [&](const char* name) -> std::string {
      if (!record.contains(name) || !record[name].is_string()) {
        throw FormatError(where + ": missing string field '" + name + "'");
      }
      return record[name].get<std::string>();
    };
    const auto date = Date::parse(field("date"));
    if (!date) throw FormatError(where + ": bad date");
    TimeOfDay time;
    const auto time_text = field("time");
    const auto stamp = "[" + time_text + "]";
    if (!parse_timestamp(stamp, time) || stamp.size() != (time.second ? 10u : 7u)) {
      throw FormatError(where + ": bad time '" + time_text + "'");
    }
    const auto kind = parse_message_kind(field("kind"));
    if (!kind) throw FormatError(where + ": bad kind");
    auto nick = field("nick");
    if (!valid_nick(nick)) throw FormatError(where + ": bad nick '" + nick + "'");
    corpus.messages.push_back(ChatMessage{*date, time, std::move(nick), field("body"), *kind});
    if (corpus.source_files.empty() || corpus.source_files.back().date != *date) {
      corpus.source_files.push_back(SourceFileSummary{"", *date, 0, 0, 0});
    }
    auto& summary = corpus.source_files.back();
    ++summary.total_lines;
    ++summary.parsed_lines;
  }
  return corpus;
}

}  // namespace ircsna
