#include "frobtope/group_spec.hpp"

#include <charconv>
#include <limits>

namespace frobtope {

GroupSpecError::GroupSpecError(std::string const &message, std::size_t position)
: std::invalid_argument(message + " at position " + std::to_string(position)),
  position_(position)
{}

namespace {

class Cursor
{
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  std::uint64_t number()
  {
    auto begin = text_.data() + pos_;
    auto end = text_.data() + text_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range)
      throw GroupSpecError("number out of range", pos_);
    if (ec != std::errc() || ptr == begin)
      throw GroupSpecError("expected a number", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void expect(char c)
  {
    if (peek() != c)
      throw GroupSpecError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void finish() const
  {
    if (!done())
      throw GroupSpecError("unexpected trailing input", pos_);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

GroupSpec parse_group_spec(std::string_view text)
{
  GroupSpec spec;
  auto colon = text.find(':');
  auto keyword = text.substr(0, colon);
  Cursor cur(text);

  auto skip_keyword = [&] {
    for (std::size_t i = 0; i < keyword.size(); ++i)
      cur.expect(text[i]);
    cur.expect(':');
  };

  if (keyword == "a4") {
    if (colon != std::string_view::npos)
      throw GroupSpecError("a4 takes no parameters", colon);
    spec.kind = GroupSpec::Kind::a4;
    return spec;
  }
  if (colon == std::string_view::npos)
    throw GroupSpecError("unknown group spec '" + std::string(text) + "'", 0);

  if (keyword == "dihedral" || keyword == "cyclic") {
    spec.kind = keyword == "dihedral" ? GroupSpec::Kind::dihedral : GroupSpec::Kind::cyclic;
    skip_keyword();
    spec.params.push_back(cur.number());
    cur.finish();
  } else if (keyword == "pq") {
    spec.kind = GroupSpec::Kind::pq;
    skip_keyword();
    spec.params.push_back(cur.number());
    cur.expect(',');
    spec.params.push_back(cur.number());
    cur.expect(',');
    spec.params.push_back(cur.number());
    cur.finish();
  } else if (keyword == "gens") {
    spec.kind = GroupSpec::Kind::gens;
    skip_keyword();
    auto degree_pos = cur.pos();
    auto degree = cur.number();
    if (degree == 0 || degree > std::numeric_limits<Point>::max())
      throw GroupSpecError("degree must be positive", degree_pos);
    spec.degree = static_cast<std::size_t>(degree);
    while (!cur.done()) {
      cur.expect(';');
      auto perm_pos = cur.pos();
      std::vector<Point> images;
      images.push_back(static_cast<Point>(cur.number()));
      while (cur.peek() == ',') {
        cur.expect(',');
        auto v = cur.number();
        if (v > std::numeric_limits<Point>::max())
          throw GroupSpecError("point out of range", cur.pos());
        images.push_back(static_cast<Point>(v));
      }
      if (images.size() != spec.degree)
        throw GroupSpecError("permutation has " + std::to_string(images.size()) +
                             " entries, expected " + std::to_string(spec.degree), perm_pos);
      try {
        spec.generators.emplace_back(images);
      } catch (std::invalid_argument const &e) {
        throw GroupSpecError(e.what(), perm_pos);
      }
    }
  } else {
    throw GroupSpecError("unknown group kind '" + std::string(keyword) + "'", 0);
  }
  return spec;
}

FrobeniusSystem build_system(GroupSpec const &spec, std::size_t group_cap)
{
  switch (spec.kind) {
  case GroupSpec::Kind::dihedral: return build_dihedral(spec.params.at(0));
  case GroupSpec::Kind::a4: return build_a4();
  case GroupSpec::Kind::pq: return build_pq(spec.params.at(0), spec.params.at(1), spec.params.at(2));
  case GroupSpec::Kind::cyclic: return build_cyclic(spec.params.at(0));
  case GroupSpec::Kind::gens:
    return build_frobenius_system(generate_group(spec.generators, spec.degree, group_cap));
  }
  throw std::logic_error("unhandled group spec kind");
}

} // namespace frobtope
