"""Write SVG pictures of the SL3 and SL2 apartments into the current directory."""

from newtonstrata import PlotSpec, build_root_datum, parse_element, plot_apartment

G = build_root_datum("SL:3")
witness = parse_element("t[-2,0,2]*s1*s2*s1", G)
svg = plot_apartment(PlotSpec(G, radius=4, highlight=[witness], shade_shrunken=True))
with open("sl3_apartment.svg", "w") as fh:
    fh.write(svg)
print("sl3_apartment.svg:", svg.count("<polygon"), "alcoves")

H = build_root_datum("SL:2")
with open("sl2_apartment.svg", "w") as fh:
    fh.write(plot_apartment(PlotSpec(H, radius=3)))
print("sl2_apartment.svg written")
