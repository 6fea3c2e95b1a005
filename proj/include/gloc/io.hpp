#pragma once

#include <map>

#include <json.hpp>

#include "gloc/bibundle.hpp"
#include "gloc/group.hpp"

namespace gloc {

using Json = nlohmann::ordered_json;

// Named values loaded from one file.  A file holding a single groupoid (top
// level "objects") loads as a workspace with one groupoid named after the file.
struct Workspace {
  std::map<std::string, Groupoid> groupoids;
  std::map<std::string, Functor> functors;
  std::map<std::string, NatTrans> transformations;
  std::map<std::string, GM> spans;
  std::map<std::string, TwoCellDiagram> diagrams;
  std::map<std::string, Bibundle> bibundles;
  bool single_groupoid = false;

  const Groupoid& groupoid(const std::string& name) const;
  const Functor& functor(const std::string& name) const;
  const GM& span(const std::string& name) const;
  const TwoCellDiagram& diagram(const std::string& name) const;
  const Bibundle& bibundle(const std::string& name) const;
  // Registers g under name unless an equal groupoid is already present.
  std::string add_groupoid(const std::string& name, const Groupoid& g);
};

Workspace parse_workspace(const std::string& text, const std::string& default_name = "G");
Workspace load_workspace(const std::string& path);
std::string dump_workspace(const Workspace& w);
void save_workspace(const Workspace& w, const std::string& path);

// "trivial", "Cn", "C2xC2", "S3", "D4", "Q8" (throws ParseError).
Group parse_group(const std::string& name);

Json groupoid_to_json(const Groupoid& g);
Groupoid groupoid_from_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace gloc
