"""Rendering the multiplicity lattice: gap tables and self-similar planes.

Two views: fixing the third coordinate (a slice through the lattice) and
fixing the total |mu| (a plane).  On planes of total 2 p^K - 2 the zero-gap
set draws the mod-p Pascal triangle; the SVG files written here make that
visible at a glance.
"""

from pathlib import Path

from triarr.atlas import AtlasSpec, build_atlas, render_ascii, render_svg

print("gap values on the slice m3 = 4, p = 3 (centers bracketed):")
spec = AtlasSpec(p=3, mode="m3", value=4, max_mu1=8, max_mu2=8,
                 cell="delta", mark_centers=True)
print(render_ascii(build_atlas(spec)))

print("lower exponent on the slice m3 = 16, p = 3 (the binomial-basis")
print("region shows as the constant-16 plateau):")
spec = AtlasSpec(p=3, mode="m3", value=16, max_mu1=18, max_mu2=18, cell="lowdegree")
print(render_ascii(build_atlas(spec)))

out = Path.cwd()
for p, K in ((2, 5), (3, 3)):
    total = 2 * p**K - 2
    spec = AtlasSpec(p=p, mode="sum", value=total, max_mu1=total, max_mu2=total,
                     cell="zero")
    path = out / f"zero_gap_plane_p{p}_total{total}.svg"
    path.write_text(render_svg(build_atlas(spec)))
    print(f"wrote {path} (filled cells = zero gap, a mod-{p} Pascal pattern)")
