"""
From RGB bytes to CIELAB and back to a difference number
========================================================

Every evaluation in this package happens in CIELAB, not RGB, because
Euclidean distance between RGB bytes is a poor stand-in for what eyes
perceive. This walkthrough converts a few recipes and compares the two
difference formulas on them.
"""
from huecast.color import delta_e_2000, delta_e_76, rgb_to_hex, rgb_to_lab

# a handful of recipes, from full saturation down into the grays
recipes = {
    "red": (255, 0, 0),
    "dark red": (128, 0, 0),
    "sky blue": (135, 206, 235),
    "middle gray": (119, 119, 119),
    "white": (255, 255, 255),
}

print("Lab coordinates under D65:")
for name, rgb in recipes.items():
    lab = rgb_to_lab(rgb)
    print(f"  {name:<12} {rgb_to_hex(rgb)}  L*={lab[0]:6.2f}  a*={lab[1]:7.2f}  b*={lab[2]:7.2f}")

# CIE76 is plain Euclidean distance in Lab. CIEDE2000 reweights
# lightness, chroma, and hue, so the two disagree most in saturated
# regions and agree closely near the gray axis.
pairs = [
    ("red", "dark red"),
    ("red", "sky blue"),
    ("middle gray", "white"),
]

print("\ncolor difference, both formulas:")
for a, b in pairs:
    la, lb = rgb_to_lab(recipes[a]), rgb_to_lab(recipes[b])
    print(
        f"  {a:<12} vs {b:<12} CIE76={delta_e_76(la, lb):7.2f}  "
        f"CIEDE2000={delta_e_2000(la, lb):7.2f}"
    )

# a difference of 0 means identical colors; around 2 is roughly the
# threshold where an attentive observer starts to notice
same = rgb_to_lab((10, 20, 30))
print(f"\nidentity check: {delta_e_2000(same, same):.4f}")
