#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ppcs/graph.hpp"

namespace ppcs {

// File formats (SNAP conventions):
//   edges:     "<u> <v>" per line, '#' lines ignored
//   attrs:     "<v><TAB or space><attr>[,<attr>...]" per line
//   overlays:  "P <owner> <neighbor>" | "A <owner> <vertex> <attr>" per line
//   ground truth: one community per line, whitespace-separated vertex ids

AttributedPublicGraph load_public_graph(std::istream& edge_source, std::istream& attr_source);
AttributedPublicGraph load_public_graph_files(const std::string& edge_path,
                                              const std::string& attr_path);

// Overlay records may intern attribute strings unseen in the public file,
// so the graph's dictionary is extended in place.
OverlayMap load_private_overlays(std::istream& source, AttributedPublicGraph& g);
OverlayMap load_private_overlays_file(const std::string& path, AttributedPublicGraph& g);

void write_edges(std::ostream& out, const AttributedPublicGraph& g);
void write_attrs(std::ostream& out, const AttributedPublicGraph& g);
void write_overlays(std::ostream& out, const AttributedPublicGraph& g, const OverlayMap& overlays);

std::vector<std::vector<VertexId>> load_ground_truth(std::istream& source,
                                                     const AttributedPublicGraph& g);
std::vector<std::vector<VertexId>> load_ground_truth_file(const std::string& path,
                                                          const AttributedPublicGraph& g);

// Query workload: one external vertex id per line, '#' lines ignored.
std::vector<VertexId> load_query_file(const std::string& path, const AttributedPublicGraph& g);

}  // namespace ppcs
