#include "laprank/csv.hpp"

namespace laprank {

bool CsvReader::next(std::vector<std::string>& fields) {
  fields.clear();
  malformed_ = false;
  record_line_ = line_;

  int c = in_.get();
  if (c == std::char_traits<char>::eof()) return false;

  enum class State { FieldStart, Unquoted, Quoted, QuoteInQuoted, AfterQuoted };
  State state = State::FieldStart;
  std::string field;

  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };

  for (;; c = in_.get()) {
    if (c == std::char_traits<char>::eof()) {
      if (state == State::Quoted) malformed_ = true;
      end_field();
      return true;
    }
    const char ch = static_cast<char>(c);
    switch (state) {
      case State::FieldStart:
      case State::Unquoted:
        if (ch == '"' && state == State::FieldStart) {
          state = State::Quoted;
        } else if (ch == ',') {
          end_field();
          state = State::FieldStart;
        } else if (ch == '\n' || ch == '\r') {
          if (ch == '\r' && in_.peek() == '\n') in_.get();
          ++line_;
          end_field();
          return true;
        } else {
          field.push_back(ch);
          state = State::Unquoted;
        }
        break;
      case State::Quoted:
        if (ch == '"') {
          state = State::QuoteInQuoted;
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
        break;
      case State::QuoteInQuoted:
        if (ch == '"') {
          field.push_back('"');
          state = State::Quoted;
          break;
        }
        state = State::AfterQuoted;
        [[fallthrough]];
      case State::AfterQuoted:
        if (ch == ',') {
          end_field();
          state = State::FieldStart;
        } else if (ch == '\n' || ch == '\r') {
          if (ch == '\r' && in_.peek() == '\n') in_.get();
          ++line_;
          end_field();
          return true;
        } else {
          malformed_ = true;
          field.push_back(ch);
        }
        break;
    }
  }
}

}  // namespace laprank
