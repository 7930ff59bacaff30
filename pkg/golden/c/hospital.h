// Code generated by knowforge from the KNOW vocabulary. DO NOT EDIT.

#ifndef KNOW_HOSPITAL_H
#define KNOW_HOSPITAL_H

#include <stdbool.h>
#include <stddef.h>

/* Hospital */
#define KNOW_HOSPITAL_TYPE_IRI "https://know.dev/Hospital"

typedef struct Hospital {
    const char *id;
} Hospital;

#endif /* KNOW_HOSPITAL_H */
