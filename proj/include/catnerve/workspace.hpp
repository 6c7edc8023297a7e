#pragma once
// Named bindings loaded from input files, and name resolution for the CLI.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catnerve/colimit.hpp"
#include "catnerve/fincat.hpp"
#include "catnerve/rewrite.hpp"
#include "catnerve/sset.hpp"

namespace catnerve {

/// A diagram together with the names it was declared with.
struct DiagramDecl {
  std::string shape;
  std::vector<std::string> nodes;  // binding names, indexed by shape object
  std::variant<CatDiagram, SSetDiagram> diagram;

  bool of_categories() const noexcept { return diagram.index() == 0; }
};

struct CoconeDecl {
  std::string diagram;
  std::string apex;
  Cocone cocone;
};

using Value = std::variant<FinCat, FpCat, TruncSSet, DiagramDecl, CoconeDecl>;

char const* kind_name(Value const& v);

struct Binding {
  std::string name;
  Value value;
  std::string origin;  // "file:line"
};

class Workspace {
 public:
  /// Throws ValidationError if the name is taken.
  void add(Binding binding);
  Binding const* find(std::string const& name) const;
  /// Throws InvalidArgument naming the missing binding.
  Binding const& at(std::string const& name) const;
  std::vector<Binding> const& bindings() const noexcept { return bindings_; }

  /// A finite category binding, or a presented one materialized through
  /// to_fincat. Throws InvalidArgument for other kinds.
  FinCat category(std::string const& name) const;
  TruncSSet const& sset(std::string const& name) const;
  /// Cocones declared over the named diagram, in declaration order.
  std::vector<Cocone> cocones_over(std::string const& diagram) const;

  /// Names defined by a previously loaded file (by canonical path).
  std::vector<std::string> const* loaded(std::filesystem::path const& file) const;
  void mark_loaded(std::filesystem::path const& file, std::vector<std::string> names);

 private:
  std::vector<Binding> bindings_;
  std::map<std::string, std::vector<std::string>> files_;
};

/// Loads one file into the workspace (text format, or JSON for *.json).
/// Returns the names it defined, in order.
std::vector<std::string> load_file(Workspace& ws, std::filesystem::path const& file);

/// Loads every *.cat, *.sset, *.diag and *.json file, in file-name order.
void load_directory(Workspace& ws, std::filesystem::path const& dir);

/// `explicit_dir` if non-empty, else $CATNERVE_CORPUS, else "corpus" if it
/// exists in the working directory.
std::optional<std::filesystem::path> corpus_directory(std::string const& explicit_dir);

/// A binding name, or a file path whose binding is the one named after the
/// file's stem (else the file's last binding). Files are loaded on demand;
/// a file name that does not exist falls back to the binding named after its
/// stem, so "s1.cat" finds the corpus binding "s1".
std::string resolve(Workspace& ws, std::string const& name_or_file);

}  // namespace catnerve
