# Engine services
#
# exact      - scaled vectors, exact squared distances, vectorised scans
# classes    - block patterns, candidate classes, modification, enumeration
# search     - addable profiles and classes, maximality frontier
# families   - intersecting families and largest bounded subsets
# assembly   - compatibility graph, cliques, assembled sets, verification
# extended   - codimension-one extension of the two-block case
