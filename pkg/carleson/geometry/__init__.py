from carleson.geometry.landmarks import (WindowLandmarks, chord_half_angle, corner_distance_sq,
                                         landmarks, power_of_origin, second_intersection,
                                         wedge_distance_sq)
from carleson.geometry.points import ORIGIN, BoundaryPoint, Height, PlanePoint, as_height, rotate
from carleson.geometry.regions import (CarlesonSet, CarlesonWindow, Region, in_set, in_window,
                                       make_region, set_slack, window_slack)
from carleson.geometry.witness import prop1_witness
