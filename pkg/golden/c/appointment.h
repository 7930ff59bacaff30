// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_APPOINTMENT_H
#define KNOW_APPOINTMENT_H

#include <stdbool.h>
#include <stddef.h>

/* Appointment */
#define KNOW_APPOINTMENT_TYPE_IRI "https://know.dev/Appointment"

typedef struct Appointment {
    const char *id;
} Appointment;

#endif /* KNOW_APPOINTMENT_H */
