"""One grading certificate per orbit: the full story for two toric surfaces.

Every face of the weight cone corresponds to an orbit closure.  For each
face the package produces an integer functional that vanishes exactly on the
generators lying on the face and is at least one everywhere else.  Reading
the functional as a grading, the degree-zero part is the face subalgebra and
nothing lives in negative degree: a multiplicative action whose fixed locus
is that orbit closure, which is the per-orbit ingredient of the flexibility
certificate.
"""

from horoflex import (
    HorosphericalDatum,
    flexibility_verdict,
    grading_for_face,
    face_lattice,
    orbit_faces,
)

for name, gens in [
    ("plane", [[1, 0], [0, 1]]),
    ("quadric cone section", [[1, 0], [1, 1], [1, 2]]),
]:
    datum = HorosphericalDatum(2, 0, gens)
    print(f"=== {name}: generators {datum.generators}")

    # faces in increasing dimension; off-face generators span the orbit ideal
    for orbit in orbit_faces(datum):
        rays = tuple(datum.cone.rays[j] for j in orbit.face.span_rays)
        off = tuple(datum.generators[j] for j in orbit.off_face_generators)
        print(f"  face dim {orbit.face.dim}: rays {rays}, ideal weights {off}")

    verdict = flexibility_verdict(datum)
    print(f"  verdict: {verdict.status.value}")
    for face, witness in zip(face_lattice(datum.cone), verdict.witnesses):
        print(
            f"    functional {witness.functional} "
            f"degrees {witness.generator_weights}"
        )
    print()

# a single face can also be queried directly
datum = HorosphericalDatum(2, 0, [[1, 0], [1, 1], [1, 2]])
face = face_lattice(datum.cone)[1]
witness = grading_for_face(datum, face)
print(f"direct query of face {face.span_rays}: functional {witness.functional}")
print("degree zero exactly on the face generators:", witness.generator_weights)
