#pragma once

#include "tricgt/classify.hpp"
#include "tricgt/game_store.hpp"

namespace tricgt {

// A store together with the classifier memo that tracks it.
struct Context {
  GameStore store;
  Classifier classifier{store};

  Context() = default;
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  GameType classify(GameId g) { return classifier.classify(g); }
};

}  // namespace tricgt
