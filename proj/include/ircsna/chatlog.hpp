#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ircsna {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  /// Parses `YYYY-MM-DD`; returns nullopt for anything else.
  static std::optional<Date> parse(std::string_view text);
  std::string to_string() const;

  auto operator<=>(const Date&) const = default;
};

/// Channel-local wall clock time. Seconds are only present when the log
/// line carried them.
struct TimeOfDay {
  int hour = 0;
  int minute = 0;
  std::optional<int> second;

  std::string to_string() const;
  auto operator<=>(const TimeOfDay&) const = default;
};

enum class MessageKind { user_message, action, system };

std::string_view to_string(MessageKind kind) noexcept;
std::optional<MessageKind> parse_message_kind(std::string_view text) noexcept;

struct ChatMessage {
  Date date;
  TimeOfDay time;
  std::string nick;  // display form, status prefix stripped
  std::string body;
  MessageKind kind = MessageKind::user_message;

  bool operator==(const ChatMessage&) const = default;
};

/// One input log file and the calendar day it covers.
struct LogSource {
  std::filesystem::path path;
  Date date;
};

struct SourceFileSummary {
  std::filesystem::path path;
  Date date;
  std::size_t total_lines = 0;
  std::size_t parsed_lines = 0;
  std::size_t skipped_lines = 0;
};

struct ChatCorpus {
  std::vector<ChatMessage> messages;
  std::vector<SourceFileSummary> source_files;

  std::size_t message_count() const noexcept { return messages.size(); }
  std::size_t skipped_lines() const noexcept;
};

/// Parses one physical log line. Recognized shapes:
///
///   [HH:MM] <nick> body        user message ([HH:MM:SS] also accepted)
///   [HH:MM] * nick body        action
///   [HH:MM] === nick ...       join/part/quit/topic notices (also -!-, ***, -->, <--)
///
/// Everything else yields nullopt and bumps `malformed`. Never throws on
/// content; invalid UTF-8 is replaced with U+FFFD first.
std::optional<ChatMessage> parse_line(std::string_view line, const Date& date);
std::optional<ChatMessage> parse_line(std::string_view line, const Date& date,
                                      std::size_t& malformed);

/// Parses every file in the declared order. Files may be parsed on up to
/// `threads` workers; the merged result does not depend on the count.
/// Throws Error("empty input set") for no files, IoError for unreadable
/// files and InvalidArgument when dates are not strictly increasing.
ChatCorpus parse_corpus(const std::vector<LogSource>& files, unsigned threads = 1);

/// Parses an in-memory log (used for fixtures and tests).
ChatCorpus parse_text(std::string_view contents, const Date& date);

/// Expands directories to their `YYYY-MM-DD.txt` members and maps plain
/// files by their stem. Result is sorted by date.
std::vector<LogSource> discover_log_files(const std::vector<std::filesystem::path>& paths);

/// Reads a manifest of `path date` pairs, one per line. Relative paths are
/// resolved against the manifest's directory; `#` starts a comment.
std::vector<LogSource> read_manifest(const std::filesystem::path& manifest);

/// Case-folded participant list with per-nick message counts.
class Roster {
 public:
  bool contains(std::string_view canonical_nick) const;
  std::size_t count(std::string_view canonical_nick) const;
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  const std::map<std::string, std::size_t, std::less<>>& counts() const noexcept { return counts_; }

  void add(std::string canonical_nick, std::size_t messages = 1);

 private:
  std::map<std::string, std::size_t, std::less<>> counts_;
};

/// Canonical identity of a nick: status prefixes removed, case folded.
std::string canonical_nick(std::string_view nick);

/// Distinct authors of user messages and actions. System lines are ignored.
Roster build_roster(const ChatCorpus& corpus);

/// Newline-delimited JSON, one message per line with fields
/// date, time, nick, body, kind in that order.
void write_corpus(std::ostream& out, const ChatCorpus& corpus);
ChatCorpus read_corpus(std::istream& in);

}  // namespace ircsna
