#include "kago/compiler.hpp"

namespace kago {

BoardInstance compile_chinese(const QBF&) {
  throw CompileError("compile_chinese not implemented yet");
}

BoardInstance compile_japanese(const PositiveFormula&) {
  throw CompileError("compile_japanese not implemented yet");
}

BoardInstance set_ko_states(const BoardInstance& instance, uint32_t) { return instance; }

std::string instance_metadata(const BoardInstance&) { return {}; }

}  // namespace kago
