#include "tricgt/notation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_map>

namespace tricgt {

namespace {

class StringSource {
 public:
  explicit StringSource(std::string_view text) : text_(text) {}

  bool at_end() { return pos_ >= text_.size(); }
  char peek() { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  std::size_t offset() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Builds the syntax tree.
struct TreeBuilder {
  using Node = GameExpr;

  Node heap(std::size_t d) { return {GameExpr::Kind::Heap, d, {}}; }
  Node options(std::vector<Node>& children) { return {GameExpr::Kind::Options, 0, std::move(children)}; }
  Node suffix(Node&& child, char op, std::size_t n) {
    std::vector<Node> c;
    c.push_back(std::move(child));
    return {op == '^' ? GameExpr::Kind::Repeat : GameExpr::Kind::Nest, n, std::move(c)};
  }
  Node sum(std::vector<Node>& items) { return {GameExpr::Kind::Sum, 0, std::move(items)}; }
};

// Evaluates while parsing, so no tree is kept.
struct StoreBuilder {
  using Node = GameId;

  GameStore& store;

  Node heap(std::size_t d) { return store.nim_heap(static_cast<unsigned>(d)); }
  Node options(std::vector<Node>& children) { return store.intern(children); }
  Node suffix(Node child, char op, std::size_t n) {
    return op == '^' ? store.multiple(child, n) : store.nest(child, n);
  }
  Node sum(std::vector<Node>& items) {
    GameId acc = kNullGame;
    for (GameId g : items) acc = store.sum(acc, g);
    return acc;
  }
};

template <class Source, class Builder>
class Parser {
 public:
  using Node = typename Builder::Node;

  Parser(Source& src, Builder& builder) : src_(src), b_(builder) {}

  Node parse_all() {
    skip_space();
    if (src_.at_end()) throw ParseError("empty expression", src_.offset());
    Node node = parse_sum();
    skip_space();
    if (!src_.at_end()) throw ParseError(std::string("unexpected '") + src_.peek() + "'", src_.offset());
    return node;
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  static bool is_space(char c) { return c == ' ' || (c >= '\t' && c <= '\r'); }

  void skip_space() {
    while (is_space(src_.peek())) src_.advance();
  }

  bool starts_item() {
    skip_space();
    return is_digit(src_.peek()) || src_.peek() == '{';
  }

  // One buffer per nesting level, reused across siblings.
  std::vector<Node>& buffer() {
    if (depth_ == buffers_.size()) buffers_.emplace_back();
    auto& b = buffers_[depth_++];
    b.clear();
    return b;
  }
  struct Release {
    std::size_t& depth;
    ~Release() { --depth; }
  };

  Node parse_sum() {
    auto& items = buffer();
    Release release{depth_};
    items.push_back(parse_item());
    for (;;) {
      skip_space();
      if (src_.peek() == '+') {
        src_.advance();
        if (!starts_item()) throw ParseError("expected a game after '+'", src_.offset());
        items.push_back(parse_item());
      } else if (starts_item()) {
        items.push_back(parse_item());
      } else {
        break;
      }
    }
    if (items.size() == 1) return std::move(items.front());
    return b_.sum(items);
  }

  Node parse_item() {
    Node node = parse_atom();
    for (;;) {
      skip_space();
      const char c = src_.peek();
      if (c != '^' && c != '_') break;
      src_.advance();
      const std::size_t n = parse_nat();
      node = b_.suffix(std::move(node), c, n);
    }
    return node;
  }

  Node parse_atom() {
    skip_space();
    const char c = src_.peek();
    if (is_digit(c)) {
      src_.advance();
      return b_.heap(static_cast<std::size_t>(c - '0'));
    }
    if (c != '{') {
      if (src_.at_end()) throw ParseError("unexpected end of input", src_.offset());
      throw ParseError(std::string("unexpected '") + c + "'", src_.offset());
    }
    const std::size_t open = src_.offset();
    src_.advance();
    skip_space();
    if (src_.peek() == '}') throw ParseError("empty braces (write 0 for the null game)", open);
    auto& options = buffer();
    Release release{depth_};
    options.push_back(parse_sum());
    for (;;) {
      skip_space();
      if (src_.peek() == ',') {
        src_.advance();
        options.push_back(parse_sum());
      } else if (src_.peek() == '}') {
        src_.advance();
        break;
      } else if (src_.at_end()) {
        throw ParseError("unclosed '{'", open);
      } else {
        throw ParseError(std::string("unexpected '") + src_.peek() + "'", src_.offset());
      }
    }
    return b_.options(options);
  }

  std::size_t parse_nat() {
    skip_space();
    if (!is_digit(src_.peek())) throw ParseError("expected a count", src_.offset());
    const std::size_t start = src_.offset();
    std::size_t n = 0;
    constexpr std::size_t kLimit = std::numeric_limits<std::uint32_t>::max();
    while (is_digit(src_.peek())) {
      n = n * 10 + static_cast<std::size_t>(src_.peek() - '0');
      if (n > kLimit) throw ParseError("count too large", start);
      src_.advance();
    }
    return n;
  }

  Source& src_;
  Builder& b_;
  std::deque<std::vector<Node>> buffers_;  // deque keeps references stable
  std::size_t depth_ = 0;
};

// Heap d is the game whose options are heaps 0 .. d-1; looked up without
// interning anything, so only heaps already in the store are found.
std::vector<std::int8_t> heap_sizes(const GameStore& store) {
  std::vector<std::int8_t> size(store.size(), -1);
  std::vector<GameId> heaps{kNullGame};
  size[0] = 0;
  while (heaps.size() <= GameStore::kMaxHeap) {
    const auto next = store.find(heaps);
    if (!next) break;
    size[next->value] = static_cast<std::int8_t>(heaps.size());
    heaps.push_back(*next);
  }
  return size;
}

// Produces render(g) a chunk at a time by walking the DAG depth first.
// Frames point into the store's arena: every game the parser meets while
// reading this text is a subgame of the root, so nothing new gets interned.
class RenderSource {
 public:
  RenderSource(const GameStore& store, GameId root) : store_(store), heaps_(heap_sizes(store)) { open(root); }

  bool at_end() {
    if (pos_ == len_) fill();
    return pos_ == len_;
  }
  char peek() { return at_end() ? '\0' : buf_[pos_]; }
  void advance() {
    ++pos_;
    ++offset_;
  }
  std::size_t offset() const { return offset_; }

  std::string drain() {
    std::string out;
    while (!at_end()) {
      out.append(buf_.data() + pos_, len_ - pos_);
      offset_ += len_ - pos_;
      pos_ = len_;
    }
    return out;
  }

 private:
  static constexpr std::size_t kChunk = 1 << 16;

  struct Frame {
    const GameId* next;
    const GameId* end;
    bool first;
  };

  void open(GameId g) {
    if (heaps_[g.value] >= 0) {
      buf_[len_++] = static_cast<char>('0' + heaps_[g.value]);
    } else {
      buf_[len_++] = '{';
      const auto opts = store_.options(g);
      stack_.push_back({opts.data(), opts.data() + opts.size(), true});
    }
  }

  void fill() {
    pos_ = len_ = 0;
    // Each step writes at most two characters.
    while (len_ + 2 <= kChunk && !stack_.empty()) {
      Frame& top = stack_.back();
      if (top.next != top.end) {
        if (!top.first) buf_[len_++] = ',';
        top.first = false;
        open(*top.next++);
      } else {
        buf_[len_++] = '}';
        stack_.pop_back();
      }
    }
  }

  const GameStore& store_;
  std::vector<std::int8_t> heaps_;
  std::vector<Frame> stack_;
  std::array<char, kChunk> buf_;
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
  std::size_t offset_ = 0;
};

}  // namespace

GameExpr parse_expr(std::string_view text) {
  StringSource src(text);
  TreeBuilder builder;
  return Parser(src, builder).parse_all();
}

GameId evaluate(GameStore& store, const GameExpr& expr) {
  switch (expr.kind) {
    case GameExpr::Kind::Heap:
      return store.nim_heap(static_cast<unsigned>(expr.value));
    case GameExpr::Kind::Options: {
      std::vector<GameId> options;
      options.reserve(expr.children.size());
      for (const auto& child : expr.children) options.push_back(evaluate(store, child));
      return store.intern(options);
    }
    case GameExpr::Kind::Repeat:
      return store.multiple(evaluate(store, expr.children.at(0)), expr.value);
    case GameExpr::Kind::Nest:
      return store.nest(evaluate(store, expr.children.at(0)), expr.value);
    case GameExpr::Kind::Sum: {
      GameId acc = kNullGame;
      for (const auto& child : expr.children) acc = store.sum(acc, evaluate(store, child));
      return acc;
    }
  }
  return kNullGame;
}

GameId parse(GameStore& store, std::string_view text) {
  StringSource src(text);
  StoreBuilder builder{store};
  return Parser(src, builder).parse_all();
}

std::string render(const GameStore& store, GameId g) {
  store.options(g);  // validates the id
  return RenderSource(store, g).drain();
}

std::uint64_t rendered_length(const GameStore& store, GameId g) {
  store.options(g);
  const auto heaps = heap_sizes(store);
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max() / 4;
  std::vector<std::uint64_t> length(g.value + 1, 0);
  for (GameId s : store.subgames(g)) {
    if (heaps[s.value] >= 0) {
      length[s.value] = 1;
      continue;
    }
    const auto opts = store.options(s);
    std::uint64_t n = 1 + opts.size();  // braces and commas
    for (GameId o : opts) n = std::min(kCap, n + length[o.value]);
    length[s.value] = n;
  }
  return length[g.value];
}

bool round_trips(GameStore& store, GameId g) {
  store.options(g);
  RenderSource src(store, g);
  StoreBuilder builder{store};
  return Parser(src, builder).parse_all() == g;
}

ExprBounds expr_bounds(const GameExpr& expr) {
  switch (expr.kind) {
    case GameExpr::Kind::Heap:
      return {static_cast<double>(expr.value) + 1, expr.value};
    case GameExpr::Kind::Options: {
      ExprBounds b{1, 0};
      for (const auto& child : expr.children) {
        const auto c = expr_bounds(child);
        b.subgames += c.subgames;
        b.birthday = std::max(b.birthday, c.birthday + 1);
      }
      return b;
    }
    case GameExpr::Kind::Repeat: {
      const auto c = expr_bounds(expr.children.at(0));
      double subgames = 1;
      for (std::size_t i = 0; i < expr.value && subgames < 1e18; ++i) subgames *= c.subgames;
      return {subgames, c.birthday * expr.value};
    }
    case GameExpr::Kind::Nest: {
      const auto c = expr_bounds(expr.children.at(0));
      return {c.subgames + static_cast<double>(expr.value), c.birthday + expr.value};
    }
    case GameExpr::Kind::Sum: {
      ExprBounds b{1, 0};
      for (const auto& child : expr.children) {
        const auto c = expr_bounds(child);
        b.subgames *= c.subgames;
        b.birthday += c.birthday;
      }
      return b;
    }
  }
  return {};
}

namespace {

std::string random_sum(std::mt19937_64& rng, int depth);

std::string random_item(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> coin(0, 9);
  std::string out;
  if (depth > 0 && coin(rng) < 4) {
    std::uniform_int_distribution<int> width(1, 3);
    const int n = width(rng);
    out = "{";
    for (int i = 0; i < n; ++i) {
      if (i > 0) out += coin(rng) < 5 ? "," : ", ";
      out += random_sum(rng, depth - 1);
    }
    out += "}";
  } else {
    out = std::string(1, static_cast<char>('0' + std::uniform_int_distribution<int>(0, 4)(rng)));
  }
  while (coin(rng) < 3) {
    out += coin(rng) < 5 ? "^" : "_";
    out += std::to_string(std::uniform_int_distribution<int>(0, 3)(rng));
  }
  return out;
}

std::string random_sum(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> sep(0, 3);
  const int n = count(rng);
  std::string out;
  for (int i = 0; i < n; ++i) {
    std::string item = random_item(rng, depth);
    if (i > 0) {
      // A bare digit after a suffix count would extend that count.
      const bool needs_break = std::isdigit(static_cast<unsigned char>(out.back())) &&
                               out.find_last_of("^_") != std::string::npos &&
                               out.find_last_of("^_") > out.find_last_of("{},+ ");
      switch (sep(rng)) {
        case 0:
          out += needs_break ? "+" : "";
          break;
        case 1:
          out += "+";
          break;
        case 2:
          out += " ";
          break;
        default:
          out += " + ";
          break;
      }
    }
    out += item;
  }
  return out;
}

}  // namespace

std::string random_expression(std::mt19937_64& rng, double max_subgames, std::size_t max_birthday) {
  for (;;) {
    std::string text = random_sum(rng, 2);
    const auto bounds = expr_bounds(parse_expr(text));
    if (bounds.subgames <= max_subgames && bounds.birthday <= max_birthday) return text;
  }
}

}  // namespace tricgt
