#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "binom/decompose.hpp"

namespace binom {

class UnknownVariable : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// "QQ", "QQ(zeta N)", "GF(p)", "GF(p^k)", "GF(p^k; modulus in t)".
Field parse_field(std::string_view text);

struct CharacterDecl {
  std::vector<std::string> cell;  // variable names of the domain
  std::vector<IntVector> rows;    // lattice generators, one entry per cell variable
  std::vector<Scalar> values;

  friend bool operator==(const CharacterDecl& a, const CharacterDecl& b) {
    return a.cell == b.cell && a.rows == b.rows && a.values == b.values;
  }
};

struct IdealDecl {
  std::string name;
  bool from_character = false;
  std::vector<Polynomial> gens;  // when !from_character
  CharacterDecl character;       // when from_character

  friend bool operator==(const IdealDecl& a, const IdealDecl& b) {
    return a.name == b.name && a.from_character == b.from_character && a.gens == b.gens &&
           a.character == b.character;
  }
};

struct Command {
  std::string op;  // radical, minprimes, cellular, assprimes, isprimary, hull, primary, circuits
  std::string target;
  friend bool operator==(const Command& a, const Command& b) { return a.op == b.op && a.target == b.target; }
};

// One ring, named ideals and characters, and the commands to run on them.
struct Session {
  RingPtr ring;
  std::vector<IdealDecl> ideals;
  std::vector<Command> commands;

  const IdealDecl& find(const std::string& name) const;  // throws UsageError
  Ideal ideal(const std::string& name) const;
  PartialCharacter character(const std::string& name) const;

  friend bool operator==(const Session& a, const Session& b);
};

const std::vector<std::string>& command_names();

// Statements end with ';', '#' starts a comment:
//   ring QQ(zeta 12)[a,b,c];
//   ideal I = a^2 - b*c, c^3;
//   character J = {a,b} [[2,-2]] [z4];      (the ideal I+(rho))
//   primary I;
Session parse_session(std::string_view text, MonomialOrder::Kind order = MonomialOrder::Kind::DegRevLex);
std::string render_session(const Session& s);

struct RunOptions {
  bool json = false;
  bool verify = false;
  DecomposeOptions decompose;
};

struct Report {
  std::string output;
  int exit_code = 0;  // 0 ok, 1 usage error, 2 mathematical error
  std::string error;
};

Report run_session(const Session& s, const RunOptions& opt);
// Parse and run; maps library errors to exit codes.
Report run_text(std::string_view text, const RunOptions& opt,
                MonomialOrder::Kind order = MonomialOrder::Kind::DegRevLex);

}  // namespace binom
