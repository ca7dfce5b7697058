"""Reference values computed once at 40 digits with mpmath and frozen here."""

A2_HEPTAGON = 0.0430048809941016448820851243502984683874
A1_OCTAGON = 0.0754441738241592202750527726315530649553
A1_CIRCLE = 0.07957747154594766788444188168625718101723
A3_PENTAGON = 0.03054101894536627673536707652169129466404
A10_SQUARE = 0.01040582726326742976066597294484911550468

Q = {
    4: 19.34225877282375455196008682070675038847,
    6: 14.696938456699069,
    8: 13.67704234172866585196137951178181603714,
    12: 12.24164440628458939819415123531015716752,
    20: 11.68158875655064343147492169059750334391,
}
Q_SPHERE = 10.63472310543309616378900490004687109679

V2_TETRA = 0.04466483493972714039227902499486445404945

# V_k(cube) - V_k(octahedron) and V_k(dodecahedron) - V_k(icosahedron) at T = 1
CUBE_MINUS_OCTA = {67: -1.231953332494474164255e-7, 68: 7.984223143398673786347e-8}
DODECA_MINUS_ICOSA = {8: -1.183528303763569966314e-5, 9: 1.278356626988814622298e-5}
