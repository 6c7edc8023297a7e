#include "catnerve/workspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "catnerve/error.hpp"
#include "catnerve/json_io.hpp"
#include "catnerve/text_format.hpp"

namespace catnerve {

namespace fs = std::filesystem;

char const* kind_name(Value const& v) {
  static char const* const names[] = {"finite category", "presented category", "sset", "diagram",
                                      "cocone"};
  return names[v.index()];
}

void Workspace::add(Binding binding) {
  if (find(binding.name)) {
    throw ValidationError("name '" + binding.name + "' is already bound");
  }
  bindings_.push_back(std::move(binding));
}

Binding const* Workspace::find(std::string const& name) const {
  auto it = std::find_if(bindings_.begin(), bindings_.end(),
                         [&](Binding const& b) { return b.name == name; });
  return it == bindings_.end() ? nullptr : &*it;
}

Binding const& Workspace::at(std::string const& name) const {
  auto const* b = find(name);
  if (!b) {
    throw InvalidArgument("unknown name '" + name + "'");
  }
  return *b;
}

FinCat Workspace::category(std::string const& name) const {
  auto const& b = at(name);
  if (auto const* c = std::get_if<FinCat>(&b.value)) {
    return *c;
  }
  if (auto const* c = std::get_if<FpCat>(&b.value)) {
    return to_fincat(*c).category;
  }
  throw InvalidArgument("'" + name + "' is a " + kind_name(b.value) + ", not a category");
}

TruncSSet const& Workspace::sset(std::string const& name) const {
  auto const& b = at(name);
  if (auto const* x = std::get_if<TruncSSet>(&b.value)) {
    return *x;
  }
  throw InvalidArgument("'" + name + "' is a " + kind_name(b.value) + ", not an sset");
}

std::vector<Cocone> Workspace::cocones_over(std::string const& diagram) const {
  std::vector<Cocone> out;
  for (auto const& b : bindings_) {
    if (auto const* c = std::get_if<CoconeDecl>(&b.value); c && c->diagram == diagram) {
      out.push_back(c->cocone);
    }
  }
  return out;
}

std::vector<std::string> const* Workspace::loaded(fs::path const& file) const {
  auto it = files_.find(fs::weakly_canonical(file).string());
  return it == files_.end() ? nullptr : &it->second;
}

void Workspace::mark_loaded(fs::path const& file, std::vector<std::string> names) {
  files_[fs::weakly_canonical(file).string()] = std::move(names);
}

std::vector<std::string> load_file(Workspace& ws, fs::path const& file) {
  if (auto const* names = ws.loaded(file)) {
    return *names;
  }
  std::ifstream in(file);
  if (!in) {
    throw InvalidArgument("cannot read " + file.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> names;
  try {
    names = file.extension() == ".json" ? parse_json_into(ws, buf.str())
                                        : parse_into(ws, buf.str());
  } catch (ParseError const& e) {
    throw ParseError(file.filename().string() + ": " + e.what(), e.line(), e.column());
  } catch (ValidationError const& e) {
    throw ValidationError(file.filename().string() + ": " + e.what());
  }
  ws.mark_loaded(file, names);
  return names;
}

void load_directory(Workspace& ws, fs::path const& dir) {
  std::vector<fs::path> files;
  for (auto const& entry : fs::directory_iterator(dir)) {
    auto ext = entry.path().extension();
    if (entry.is_regular_file() &&
        (ext == ".cat" || ext == ".sset" || ext == ".diag" || ext == ".json")) {
      files.push_back(entry.path());
    }
  }
  // categories and ssets before the diagrams that reference them
  auto rank = [](fs::path const& p) {
    auto ext = p.extension();
    return ext == ".cat" ? 0 : ext == ".sset" ? 1 : ext == ".diag" ? 2 : 3;
  };
  std::sort(files.begin(), files.end(), [&](fs::path const& a, fs::path const& b) {
    return std::pair(rank(a), a.filename()) < std::pair(rank(b), b.filename());
  });
  for (auto const& f : files) {
    load_file(ws, f);
  }
}

std::optional<fs::path> corpus_directory(std::string const& explicit_dir) {
  auto existing = [](fs::path p) {
    if (!fs::is_directory(p)) {
      throw InvalidArgument("corpus directory not found: " + p.string());
    }
    return p;
  };
  if (!explicit_dir.empty()) {
    return existing(explicit_dir);
  }
  if (char const* env = std::getenv("CATNERVE_CORPUS"); env && *env) {
    return existing(env);
  }
  if (fs::is_directory("corpus")) {
    return fs::path("corpus");
  }
  return std::nullopt;
}

std::string resolve(Workspace& ws, std::string const& name_or_file) {
  if (ws.find(name_or_file)) {
    return name_or_file;
  }
  fs::path file(name_or_file);
  if (!fs::is_regular_file(file) && ws.find(file.stem().string())) {
    return file.stem().string();
  }
  if (!fs::is_regular_file(file)) {
    throw InvalidArgument("'" + name_or_file + "' is neither a bound name nor a file");
  }
  auto names = load_file(ws, file);
  if (names.empty()) {
    throw InvalidArgument(name_or_file + " defines nothing");
  }
  auto stem = file.stem().string();
  return std::find(names.begin(), names.end(), stem) != names.end() ? stem : names.back();
}

}  // namespace catnerve
